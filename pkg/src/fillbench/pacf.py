"""Sample ACF and PACF estimators.

Two PACF estimators are provided:

* Yule-Walker: the Durbin-Levinson recursion run on the sample ACF.
* OLS: for each lag ``h`` the last coefficient of a least-squares regression
  of ``x[t]`` on ``(1, x[t-1], ..., x[t-h])``.
"""
import enum
from dataclasses import dataclass

import numpy as np

from fillbench.errors import DegenerateSeriesError, InvalidInputError, NumericalDegeneracyError

DENOMINATOR_TOL = 1e-12
RANK_TOL = 1e-10


class Normalization(enum.Enum):
    BIASED = "biased"        # divide lag-h sums by n
    UNBIASED = "unbiased"    # divide lag-h sums by n - h


class Estimator(enum.Enum):
    YULE_WALKER = "yw"
    OLS = "ols"


@dataclass(frozen=True)
class AcfEstimate:
    lags: int
    values: np.ndarray
    normalization: Normalization


@dataclass(frozen=True)
class PacfEstimate:
    lags: int
    values: np.ndarray
    estimator: Estimator

    def __getitem__(self, lag):
        """PACF at ``lag`` (1-based, like the usual alpha(h) notation)."""
        if not 1 <= lag <= self.lags:
            raise IndexError(f"lag {lag} outside 1..{self.lags}")
        return float(self.values[lag - 1])


def _as_complete(series):
    x = np.asarray(series, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError("series must be one-dimensional")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("series must be complete and finite")
    return x


def sample_acf(series, max_lag, normalization=Normalization.UNBIASED):
    """Sample autocorrelations rho(0)..rho(max_lag) about the series' own mean."""
    x = _as_complete(series)
    n = x.size
    normalization = Normalization(normalization)
    if max_lag < 0 or max_lag >= n:
        raise InvalidInputError(f"max_lag must be in [0, {n - 1}] for a series of length {n}, got {max_lag}")
    if np.ptp(x) == 0:
        raise DegenerateSeriesError("series is constant; its ACF is undefined")
    d = x - x.mean()
    acov = np.empty(max_lag + 1)
    for h in range(max_lag + 1):
        s = np.dot(d[:n - h], d[h:])
        acov[h] = s / (n - h if normalization is Normalization.UNBIASED else n)
    if acov[0] <= 0:
        raise DegenerateSeriesError("series has zero sample variance")
    values = acov / acov[0]
    values[0] = 1.0
    return AcfEstimate(max_lag, values, normalization)


def durbin_levinson(acf, max_lag):
    """Run the Durbin-Levinson recursion on an autocorrelation sequence.

    Parameters
    ----------
    acf : array_like
        rho(0)..rho(H) with ``H >= max_lag``; rho(0) is taken to be 1.
    max_lag : int

    Returns
    -------
    pacf : ndarray
        alpha(1)..alpha(max_lag).
    phi : ndarray
        Lower-triangular ``(max_lag, max_lag)`` array; row ``h - 1`` holds the
        order-``h`` AR coefficients ``phi_{h,1}..phi_{h,h}``.
    """
    rho = np.asarray(acf, dtype=float)
    if max_lag < 1 or rho.size < max_lag + 1:
        raise InvalidInputError("need rho(0)..rho(max_lag) with max_lag >= 1")
    phi = np.zeros((max_lag, max_lag))
    pacf = np.empty(max_lag)
    pacf[0] = phi[0, 0] = rho[1]
    for h in range(2, max_lag + 1):
        prev = phi[h - 2, :h - 1]
        num = rho[h] - np.dot(prev, rho[h - 1:0:-1])
        den = 1.0 - np.dot(prev, rho[1:h])
        if abs(den) < DENOMINATOR_TOL:
            raise NumericalDegeneracyError(f"Durbin-Levinson denominator vanished at lag {h}")
        a = num / den
        phi[h - 1, :h - 1] = prev - a * prev[::-1]
        phi[h - 1, h - 1] = a
        pacf[h - 1] = a
    return pacf, phi


def sample_pacf_yw(series, max_lag, normalization=Normalization.UNBIASED):
    if max_lag < 1:
        raise InvalidInputError("max_lag must be >= 1")
    acf = sample_acf(series, max_lag, normalization)
    pacf, _ = durbin_levinson(acf.values, max_lag)
    return PacfEstimate(max_lag, pacf, Estimator.YULE_WALKER)


def sample_pacf_ols(series, max_lag):
    x = _as_complete(series)
    n = x.size
    if max_lag < 1 or n <= max_lag + 1:
        raise InvalidInputError(f"OLS PACF needs 1 <= max_lag < n - 1 (n={n}, max_lag={max_lag})")
    out = np.empty(max_lag)
    for h in range(1, max_lag + 1):
        y = x[h:]
        design = np.column_stack([np.ones(n - h)] + [x[h - j:n - j] for j in range(1, h + 1)])
        beta, _, _, sv = np.linalg.lstsq(design, y, rcond=None)
        if sv[-1] <= RANK_TOL * sv[0]:
            raise NumericalDegeneracyError(f"OLS design at lag {h} is rank deficient")
        out[h - 1] = beta[-1]
    return PacfEstimate(max_lag, out, Estimator.OLS)


def sample_pacf(series, max_lag, estimator=Estimator.YULE_WALKER, normalization=Normalization.UNBIASED):
    """Dispatch to the chosen estimator; ``normalization`` only affects Yule-Walker."""
    estimator = Estimator(estimator)
    if estimator is Estimator.OLS:
        return sample_pacf_ols(series, max_lag)
    return sample_pacf_yw(series, max_lag, normalization)


def score_difference(sample_pacf1, reference_pacf1):
    """Absolute gap between a lag-1 sample PACF and its reference value."""
    return abs(float(sample_pacf1) - float(reference_pacf1))


def accuracy_score(restored, reference_pacf1, estimator=Estimator.YULE_WALKER,
                   normalization=Normalization.UNBIASED):
    """|alpha_hat(1) of ``restored`` - ``reference_pacf1``|."""
    if not -1.0 < reference_pacf1 < 1.0:
        raise InvalidInputError(f"reference PACF must lie in (-1, 1), got {reference_pacf1}")
    alpha1 = sample_pacf(restored, 1, estimator, normalization)[1]
    return score_difference(alpha1, reference_pacf1)
