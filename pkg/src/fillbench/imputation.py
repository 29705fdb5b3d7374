"""Forward, backward and mean fill for a MaskedSeries.

Boundary gaps that have no neighbour in the fill direction take the nearest
observed value from the other side, so every output has the input's length.
"""
import enum
import math

import numpy as np

from fillbench.corruption import MaskedSeries
from fillbench.errors import InvalidInputError


class ImputationMethod(enum.Enum):
    FORWARD_FILL = "forward"
    BACKWARD_FILL = "backward"
    MEAN_FILL = "mean"


def _checked(series):
    if not isinstance(series, MaskedSeries):
        series = MaskedSeries.complete(series)
    if series.n_observed == 0:
        raise InvalidInputError("cannot impute a series with no observed values")
    return series


def forward_fill(series):
    """Replace each missing value with the last observed value before it."""
    series = _checked(series)
    observed = ~series.mask
    n = len(series)
    src = np.where(observed, np.arange(n), -1)
    np.maximum.accumulate(src, out=src)
    src[src < 0] = np.argmax(observed)  # leading run
    return series.values[src].copy()


def backward_fill(series):
    """Replace each missing value with the next observed value after it."""
    series = _checked(series)
    observed = ~series.mask
    n = len(series)
    src = np.where(observed, np.arange(n), n)
    src = np.minimum.accumulate(src[::-1])[::-1]
    src[src == n] = n - 1 - np.argmax(observed[::-1])  # trailing run
    return series.values[src].copy()


def mean_fill(series):
    """Replace each missing value with the mean of the observed values."""
    series = _checked(series)
    obs = series.observed_values()
    # rounding in the mean can land one ulp outside the observed range
    fill = min(max(math.fsum(obs) / obs.size, obs.min()), obs.max())
    out = series.values.copy()
    out[series.mask] = fill
    return out


_DISPATCH = {
    ImputationMethod.FORWARD_FILL: forward_fill,
    ImputationMethod.BACKWARD_FILL: backward_fill,
    ImputationMethod.MEAN_FILL: mean_fill,
}


def impute(series, method):
    return _DISPATCH[ImputationMethod(method)](series)
