"""Random removal of a fixed fraction of observations."""
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from fillbench.errors import InvalidInputError, InvalidSpecError
from fillbench.seeding import check_seed, make_rng


@dataclass(frozen=True)
class MaskedSeries:
    """A series of floats plus the set of indices whose values are unknown.

    Values stored at missing indices are kept (they are the originals when the
    series came from ``drop_values``) but no fill method ever reads them.
    """

    values: np.ndarray
    missing: frozenset = frozenset()

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1:
            raise InvalidInputError("values must be one-dimensional")
        missing = frozenset(int(i) for i in self.missing)
        n = values.size
        if any(not 0 <= i < n for i in missing):
            raise InvalidInputError(f"missing indices must lie in [0, {n})")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "missing", missing)

    @classmethod
    def from_optional(cls, items):
        """Build from a sequence where ``None`` or NaN marks a missing value."""
        vals, missing = [], set()
        for i, v in enumerate(items):
            if v is None or (isinstance(v, float) and np.isnan(v)):
                missing.add(i)
                vals.append(np.nan)
            else:
                vals.append(float(v))
        return cls(np.array(vals), frozenset(missing))

    @classmethod
    def complete(cls, values):
        return cls(values, frozenset())

    def __len__(self):
        return self.values.size

    @property
    def mask(self):
        """Boolean array, True where the value is missing."""
        m = np.zeros(self.values.size, dtype=bool)
        m[sorted(self.missing)] = True
        return m

    @property
    def n_observed(self):
        return self.values.size - len(self.missing)

    def observed_values(self):
        return self.values[~self.mask]

    def reversed(self):
        n = self.values.size
        return MaskedSeries(self.values[::-1], frozenset(n - 1 - i for i in self.missing))

    def to_optional(self):
        return [None if i in self.missing else float(v) for i, v in enumerate(self.values)]


@dataclass(frozen=True)
class DropoutSpec:
    rate: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.rate < 1.0:
            raise InvalidSpecError(f"dropout rate must lie in [0, 1), got {self.rate}")
        object.__setattr__(self, "seed", check_seed(self.seed))


def missing_count(rate, n):
    """round(rate * n) with ties to even, evaluated on the decimal form of ``rate``.

    Working in decimal keeps e.g. ``0.15 * 10`` an exact tie instead of
    ``1.5000000000000002``.
    """
    exact = Decimal(repr(float(rate))) * int(n)
    return int(exact.to_integral_value(rounding=ROUND_HALF_EVEN))


def drop_values(series, spec):
    """Mark ``round(rate * n)`` indices, chosen uniformly without replacement, as missing."""
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or not np.all(np.isfinite(x)):
        raise InvalidInputError("drop_values needs a complete one-dimensional series")
    n = x.size
    k = missing_count(spec.rate, n)
    if k > n - 1:
        raise InvalidSpecError(f"dropping {k} of {n} values would leave nothing observed")
    rng = make_rng(spec.seed)
    idx = rng.choice(n, size=k, replace=False) if k else ()
    return MaskedSeries(x, frozenset(int(i) for i in idx))
