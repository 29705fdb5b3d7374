"""Autoregressive models: stationarity, theoretical ACF/PACF and simulation.

The process is

    x[t] = phi_1 x[t-1] + ... + phi_p x[t-p] + w[t],   w[t] ~ N(0, sigma^2)

Simulated paths start from the stationary distribution, so no burn-in is
discarded and the returned length is exactly the requested one.
"""
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter, lfiltic

from fillbench.errors import DomainError, InvalidSpecError
from fillbench.pacf import durbin_levinson
from fillbench.seeding import check_seed, make_rng

MIN_LENGTH = 4


@dataclass(frozen=True)
class ArModel:
    """AR(p) model with coefficients ``phi_1..phi_p`` and innovation std ``noise_std``."""

    coefficients: tuple
    noise_std: float = 1.0

    def __post_init__(self):
        coefs = tuple(float(c) for c in np.atleast_1d(self.coefficients))
        if len(coefs) < 1:
            raise InvalidSpecError("an AR model needs at least one coefficient")
        if not all(np.isfinite(coefs)):
            raise InvalidSpecError("coefficients must be finite")
        if not (np.isfinite(self.noise_std) and self.noise_std > 0):
            raise InvalidSpecError(f"noise_std must be positive, got {self.noise_std}")
        object.__setattr__(self, "coefficients", coefs)
        object.__setattr__(self, "noise_std", float(self.noise_std))

    @classmethod
    def ar1(cls, phi, noise_std=1.0):
        return cls((phi,), noise_std)

    @property
    def order(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class SimulationSpec:
    model: ArModel
    length: int = 500
    seed: int = 0

    def __post_init__(self):
        if int(self.length) != self.length or self.length < MIN_LENGTH:
            raise InvalidSpecError(f"length must be an integer >= {MIN_LENGTH}, got {self.length}")
        object.__setattr__(self, "length", int(self.length))
        object.__setattr__(self, "seed", check_seed(self.seed))


def is_stationary(model):
    """True iff every root of ``1 - phi_1 z - ... - phi_p z^p`` lies outside the unit circle."""
    phi = np.asarray(model.coefficients)
    if model.order == 1:
        return bool(abs(phi[0]) < 1.0)
    # np.roots wants the highest degree first and drops leading zeros itself
    poly = np.concatenate([-phi[::-1], [1.0]])
    roots = np.roots(poly)
    return bool(np.all(np.abs(roots) > 1.0))


def _require_stationary(model):
    if not is_stationary(model):
        raise DomainError(f"AR model {model.coefficients} is not stationary")


def theoretical_acf(model, max_lag):
    """Autocorrelations rho(0)..rho(max_lag) of a stationary AR(p) model.

    rho(1)..rho(p) come from the Yule-Walker system; later lags follow the
    recursion ``rho(h) = sum_j phi_j rho(h - j)``.
    """
    _require_stationary(model)
    if max_lag < 0:
        raise ValueError("max_lag must be >= 0")
    phi = model.coefficients
    p = model.order
    n_lags = max(max_lag, p)
    rho = np.zeros(n_lags + 1)
    rho[0] = 1.0
    if p == 1:
        # the recursion alone is exact for AR(1) and keeps rho(1) == phi bit-for-bit
        pass
    else:
        # unknowns rho(1..p); rho(k) = sum_j phi_j rho(|k - j|)
        a = np.eye(p)
        b = np.zeros(p)
        for k in range(1, p + 1):
            for j in range(1, p + 1):
                lag = abs(k - j)
                if lag == 0:
                    b[k - 1] += phi[j - 1]
                else:
                    a[k - 1, lag - 1] -= phi[j - 1]
        rho[1:p + 1] = np.linalg.solve(a, b)
    start = 1 if p == 1 else p + 1
    for h in range(start, n_lags + 1):
        acc = 0.0
        for j in range(1, p + 1):
            acc += phi[j - 1] * rho[abs(h - j)]
        rho[h] = acc
    return rho[:max_lag + 1]


def theoretical_pacf(model, max_lag):
    """Partial autocorrelations alpha(1)..alpha(max_lag); zero beyond the model order."""
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    rho = theoretical_acf(model, max_lag)
    pacf, _ = durbin_levinson(rho, max_lag)
    return pacf


def stationary_variance(model):
    """gamma(0) = sigma^2 / (1 - sum_j phi_j rho(j))."""
    rho = theoretical_acf(model, model.order)
    return model.noise_std ** 2 / (1.0 - np.dot(model.coefficients, rho[1:model.order + 1]))


def _stationary_autocov(model, lags):
    return stationary_variance(model) * theoretical_acf(model, lags)


def simulate(spec):
    """Simulate ``spec.length`` values of the AR process; bit-identical for equal specs."""
    model = spec.model
    _require_stationary(model)
    n = spec.length
    p = model.order
    sigma = model.noise_std
    rng = make_rng(spec.seed)
    z = rng.standard_normal(n)

    k = min(p, n)
    if p == 1:
        init = z[:1] * (sigma / np.sqrt(1.0 - model.coefficients[0] ** 2))
    else:
        gamma = _stationary_autocov(model, p - 1)
        cov = gamma[np.abs(np.subtract.outer(np.arange(p), np.arange(p)))]
        init = (np.linalg.cholesky(cov) @ z[:p])[:k]
    if n <= p:
        return init.copy()

    a = np.concatenate([[1.0], -np.asarray(model.coefficients)])
    zi = lfiltic([1.0], a, y=init[::-1])
    rest, _ = lfilter([1.0], a, sigma * z[p:], zi=zi)
    return np.concatenate([init, rest])
