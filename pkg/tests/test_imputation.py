import numpy as np
import pytest
from hypothesis import given, settings

from fillbench import (
    ImputationMethod,
    InvalidInputError,
    MaskedSeries,
    backward_fill,
    forward_fill,
    impute,
    mean_fill,
)
from strategies import masked_series

M = None  # marks a missing value in the examples below


def ms(items):
    return MaskedSeries.from_optional(items)


@pytest.mark.parametrize("fill, items, expected", [
    (forward_fill, [1, M, 3], [1, 1, 3]),
    (forward_fill, [M, M, 5, M], [5, 5, 5, 5]),
    (forward_fill, [2, M, M, 7], [2, 2, 2, 7]),
    (backward_fill, [1, M, 3], [1, 3, 3]),
    (backward_fill, [M, 5, M, M], [5, 5, 5, 5]),
    (backward_fill, [2, M, M, 7], [2, 7, 7, 7]),
    (mean_fill, [1, M, 3], [1, 2, 3]),
    (mean_fill, [4, 4, M, 4], [4, 4, 4, 4]),
    (mean_fill, [1, M, 2, M, 6], [1, 3, 2, 3, 6]),
    (forward_fill, [M, 1, M, 2, M], [1, 1, 1, 2, 2]),
    (backward_fill, [M, 1, M, 2, M], [1, 1, 2, 2, 2]),
])
def test_fill_examples(fill, items, expected):
    assert fill(ms(items)).tolist() == expected


@pytest.mark.parametrize("items, method, expected", [
    ([1, M, 3], ImputationMethod.MEAN_FILL, [1, 2, 3]),
    ([2, M, M, 7], ImputationMethod.FORWARD_FILL, [2, 2, 2, 7]),
    ([2, M, M, 7], "backward", [2, 7, 7, 7]),
])
def test_impute_dispatch(items, method, expected):
    assert impute(ms(items), method).tolist() == expected


@pytest.mark.parametrize("method", list(ImputationMethod))
def test_complete_series_unchanged(method):
    x = np.array([0.3, -1.2, 5.0, 2.25])
    np.testing.assert_array_equal(impute(MaskedSeries.complete(x), method), x)
    np.testing.assert_array_equal(impute(x, method), x)


@pytest.mark.parametrize("method", list(ImputationMethod))
def test_all_missing_rejected(method):
    with pytest.raises(InvalidInputError):
        impute(ms([M, M, M]), method)


def test_mean_fill_ignores_hidden_values():
    s = MaskedSeries(np.array([1.0, 100.0, 3.0]), frozenset({1}))
    assert mean_fill(s).tolist() == [1.0, 2.0, 3.0]


def test_mean_fill_stays_in_range_under_rounding():
    # 0.1 + 0.1 + 0.1 = 0.30000000000000004; a naive mean lands above 0.1
    assert mean_fill(ms([0.1, 0.1, M, 0.1])).tolist() == [0.1] * 4


@settings(max_examples=300, deadline=None)
@given(masked_series())
def test_properties(s):
    observed = ~s.mask
    obs = s.values[observed]
    for method in ImputationMethod:
        out = impute(s, method)
        assert out.shape == (len(s),)
        assert np.all(np.isfinite(out))
        np.testing.assert_array_equal(out[observed], obs)
        assert np.all((out >= obs.min()) & (out <= obs.max()))
        np.testing.assert_array_equal(impute(MaskedSeries.complete(out), method), out)
    np.testing.assert_array_equal(backward_fill(s.reversed()), forward_fill(s)[::-1])
    np.testing.assert_array_equal(forward_fill(s.reversed()), backward_fill(s)[::-1])


@given(masked_series(min_size=1, max_size=30))
def test_single_observation_mean_fill(s):
    keep = min(s.missing ^ set(range(len(s))))
    single = MaskedSeries(s.values, frozenset(set(range(len(s))) - {keep}))
    np.testing.assert_array_equal(mean_fill(single), np.full(len(s), s.values[keep]))
