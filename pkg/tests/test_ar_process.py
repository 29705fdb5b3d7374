import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fillbench import (
    ArModel,
    DomainError,
    InvalidSpecError,
    SimulationSpec,
    durbin_levinson,
    is_stationary,
    simulate,
    theoretical_acf,
    theoretical_pacf,
)
from fillbench.ar_process import stationary_variance


def coefficients_from_roots(roots):
    """AR coefficients of prod_i (1 - z / r_i) = 1 - phi_1 z - ... - phi_p z^p."""
    poly = np.array([1.0])  # ascending powers of z
    for r in roots:
        poly = np.convolve(poly, [1.0, -1.0 / r])
    return tuple(-poly[1:])


# |root| >= 2 keeps the Toeplitz systems well conditioned; closer to the unit
# circle, float64 rounding alone puts the cutoff lags around 1e-11
stationary_roots = st.lists(
    st.floats(2.0, 10.0).flatmap(lambda m: st.sampled_from([m, -m])), min_size=1, max_size=4)


@pytest.mark.parametrize("coefs, expected", [
    ((0.4,), True),
    ((1.0,), False),
    ((-0.999,), True),
    ((-1.0,), False),
    ((0.0,), True),
    ((1.2, -0.5), True),
    ((0.5, 0.5), False),   # unit root at z = 1
    ((0.0, 0.0), True),
])
def test_is_stationary_examples(coefs, expected):
    assert is_stationary(ArModel(coefs)) is expected


def test_ar2_roots_by_hand():
    # 1 - 1.2 z + 0.5 z^2 = 0  ->  z = 1.2 +/- i sqrt(0.56), |z| = sqrt(2)
    disc = 1.2 ** 2 - 4 * 0.5
    assert disc < 0
    modulus = math.hypot(1.2 / (2 * 0.5), math.sqrt(-disc) / (2 * 0.5))
    assert modulus == pytest.approx(math.sqrt(2))
    assert modulus > 1
    assert is_stationary(ArModel((1.2, -0.5)))


def test_model_validation():
    with pytest.raises(InvalidSpecError):
        ArModel((0.4,), noise_std=0.0)
    with pytest.raises(InvalidSpecError):
        ArModel(())
    assert ArModel.ar1(0.3).order == 1


def test_theoretical_acf_ar1():
    np.testing.assert_allclose(theoretical_acf(ArModel.ar1(0.4), 2), [1.0, 0.4, 0.16], rtol=0, atol=1e-15)
    assert list(theoretical_acf(ArModel.ar1(-0.9), 1)) == [1.0, -0.9]


def test_theoretical_acf_ar2_hand_solve():
    # rho1 = phi1 + phi2 rho1 -> rho1 = 1.2 / 1.5; rho2 = phi1 rho1 + phi2
    rho1 = 1.2 / (1 - -0.5)
    rho2 = 1.2 * rho1 - 0.5
    np.testing.assert_allclose(theoretical_acf(ArModel((1.2, -0.5)), 2), [1.0, rho1, rho2], atol=1e-14)
    np.testing.assert_allclose(theoretical_pacf(ArModel((1.2, -0.5)), 2), [rho1, -0.5], atol=1e-12)


def test_theoretical_pacf_ar1_cutoff():
    assert list(theoretical_pacf(ArModel.ar1(0.4), 3)) == [0.4, 0.0, 0.0]
    assert list(theoretical_pacf(ArModel.ar1(-0.9), 1)) == [-0.9]


def test_non_stationary_is_domain_error():
    with pytest.raises(DomainError):
        theoretical_acf(ArModel.ar1(1.0), 2)
    with pytest.raises(DomainError):
        theoretical_pacf(ArModel.ar1(-1.5), 2)
    with pytest.raises(DomainError):
        simulate(SimulationSpec(ArModel.ar1(1.0), 10, 1))


@given(st.floats(-0.999, 0.999))
def test_pacf_lag1_equals_phi_exactly(phi):
    assert theoretical_pacf(ArModel.ar1(phi), 1)[0] == phi


@settings(deadline=None)
@given(stationary_roots, st.integers(1, 4))
def test_pacf_cutoff_and_coefficient_recovery(roots, extra):
    coefs = coefficients_from_roots(roots)
    model = ArModel(coefs)
    assert is_stationary(model)
    p = model.order
    pacf = theoretical_pacf(model, p + extra)
    assert np.all(np.abs(pacf[p:]) < 1e-12)
    assert pacf[p - 1] == pytest.approx(coefs[-1], abs=1e-10)
    _, phi = durbin_levinson(theoretical_acf(model, p), p)
    np.testing.assert_allclose(phi[p - 1, :p], coefs, atol=1e-10)


def test_cutoff_near_unit_root_is_small():
    model = ArModel(coefficients_from_roots([1.25] * 4))
    pacf = theoretical_pacf(model, 8)
    assert np.all(np.abs(pacf[4:]) < 1e-9)
    assert pacf[3] == pytest.approx(model.coefficients[-1], abs=1e-9)


def test_simulate_white_noise_matches_raw_normals():
    x = simulate(SimulationSpec(ArModel.ar1(0.0), 100, 42))
    np.testing.assert_array_equal(x, np.random.default_rng(42).standard_normal(100))


def test_simulate_deterministic_and_length():
    spec = SimulationSpec(ArModel.ar1(0.7), 257, 2**64 - 1)
    a, b = simulate(spec), simulate(spec)
    assert a.shape == (257,)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, simulate(SimulationSpec(ArModel.ar1(0.7), 257, 1)))


def test_simulation_spec_validation():
    with pytest.raises(InvalidSpecError):
        SimulationSpec(ArModel.ar1(0.1), 3, 0)
    with pytest.raises(ValueError):
        SimulationSpec(ArModel.ar1(0.1), 10, -1)


def test_simulate_follows_recursion():
    phi, sigma, seed = 0.6, 2.5, 7
    x = simulate(SimulationSpec(ArModel.ar1(phi, sigma), 50, seed))
    z = np.random.default_rng(seed).standard_normal(50)
    expected = np.empty(50)
    expected[0] = z[0] * sigma / math.sqrt(1 - phi ** 2)
    for t in range(1, 50):
        expected[t] = phi * expected[t - 1] + sigma * z[t]
    np.testing.assert_allclose(x, expected, rtol=1e-12, atol=1e-12)


def test_lag1_autocorrelation_large_sample():
    x = simulate(SimulationSpec(ArModel.ar1(0.4), 100_000, 11))
    d = x - x.mean()
    assert abs(np.dot(d[:-1], d[1:]) / np.dot(d, d) - 0.4) < 0.02


@pytest.mark.parametrize("phi", [-0.9, -0.5, 0.0, 0.3, 0.9])
def test_stationary_variance(phi):
    sigma = 1.5
    x = simulate(SimulationSpec(ArModel.ar1(phi, sigma), 100_000, 3))
    target = sigma ** 2 / (1 - phi ** 2)
    assert stationary_variance(ArModel.ar1(phi, sigma)) == pytest.approx(target)
    assert x.var(ddof=1) == pytest.approx(target, rel=0.05)


def test_ar2_simulation_matches_theory():
    model = ArModel((1.2, -0.5))
    x = simulate(SimulationSpec(model, 100_000, 5))
    d = x - x.mean()
    acf = [np.dot(d[:len(d) - h], d[h:]) / np.dot(d, d) for h in range(3)]
    np.testing.assert_allclose(acf, theoretical_acf(model, 2), atol=0.02)
    assert x.var() == pytest.approx(stationary_variance(model), rel=0.1)
