"""Monte-Carlo grid over (phi, dropout rate, fill method).

For each replicate of a (phi, rate) cell an AR(1) series is simulated, a
fraction of it dropped, and the same corrupted series is restored with every
fill method (paired design). Each restored series is scored by the absolute
gap between its lag-1 sample PACF and a reference value.

Replicate ``i`` of cell ``(phi_grid[a], dropout_grid[b])`` draws its randomness
from ``derive_seed(master_seed, a, b, i)``, so results do not depend on the
execution order or on how many worker processes are used.
"""
import enum
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

import numpy as np

from fillbench.ar_process import MIN_LENGTH, ArModel, SimulationSpec, simulate
from fillbench.corruption import DropoutSpec, drop_values, missing_count
from fillbench.errors import ConfigError, FillbenchError, GridError
from fillbench.imputation import ImputationMethod, impute
from fillbench.pacf import Estimator, Normalization, sample_pacf, score_difference
from fillbench.seeding import UINT64_MAX, derive_seed

MAX_FAILURE_FRACTION = 0.10


class BaselineMode(enum.Enum):
    THEORETICAL_PHI = "theoretical"
    UNCORRUPTED_SAMPLE_PACF = "sample"


ALL_METHODS = (ImputationMethod.FORWARD_FILL, ImputationMethod.BACKWARD_FILL, ImputationMethod.MEAN_FILL)


def _tenths(values):
    return tuple(round(v / 10, 1) for v in values)


PRESETS = {
    "figures": dict(
        phi_grid=_tenths([k for k in range(-9, 10) if k != 0]),
        dropout_grid=(0.10, 0.15, 0.20, 0.25),
    ),
    "methodology": dict(
        phi_grid=_tenths(range(1, 10)),
        dropout_grid=(0.05, 0.10, 0.20, 0.30),
    ),
}


@dataclass(frozen=True)
class ExperimentConfig:
    phi_grid: tuple = PRESETS["figures"]["phi_grid"]
    dropout_grid: tuple = PRESETS["figures"]["dropout_grid"]
    replicates: int = 100
    series_length: int = 500
    master_seed: int = 0
    methods: tuple = ALL_METHODS
    baseline: BaselineMode = BaselineMode.UNCORRUPTED_SAMPLE_PACF
    estimator: Estimator = Estimator.YULE_WALKER
    normalization: Normalization = Normalization.UNBIASED
    noise_std: float = 1.0

    def __post_init__(self):
        def put(name, value):
            object.__setattr__(self, name, value)

        try:
            put("phi_grid", tuple(float(v) for v in self.phi_grid))
            put("dropout_grid", tuple(float(v) for v in self.dropout_grid))
        except (TypeError, ValueError) as exc:
            raise ConfigError("phi_grid/dropout_grid", f"grids must be lists of numbers ({exc})") from None
        for name, enum_cls in (("baseline", BaselineMode), ("estimator", Estimator),
                               ("normalization", Normalization)):
            try:
                put(name, enum_cls(getattr(self, name)))
            except ValueError:
                allowed = ", ".join(m.value for m in enum_cls)
                raise ConfigError(name, f"unknown value {getattr(self, name)!r} (expected one of {allowed})") from None
        try:
            put("methods", tuple(ImputationMethod(m) for m in self.methods))
        except ValueError as exc:
            raise ConfigError("methods", str(exc)) from None

        for name in ("replicates", "series_length", "master_seed"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                if isinstance(value, float) and value.is_integer():
                    value = int(value)
                else:
                    raise ConfigError(name, f"must be an integer, got {value!r}")
            put(name, int(value))

        if self.replicates < 1:
            raise ConfigError("replicates", f"must be >= 1, got {self.replicates}")
        if self.series_length < MIN_LENGTH:
            raise ConfigError("series_length", f"must be >= {MIN_LENGTH}, got {self.series_length}")
        if not 0 <= self.master_seed <= UINT64_MAX:
            raise ConfigError("master_seed", "must be an unsigned 64-bit integer")
        if not (math.isfinite(self.noise_std) and self.noise_std > 0):
            raise ConfigError("noise_std", f"must be positive, got {self.noise_std}")
        put("noise_std", float(self.noise_std))

        for name in ("phi_grid", "dropout_grid", "methods"):
            grid = getattr(self, name)
            if not grid:
                raise ConfigError(name, "must not be empty")
            if len(set(grid)) != len(grid):
                raise ConfigError(name, "contains duplicates")
        for phi in self.phi_grid:
            if not abs(phi) < 1.0:
                raise ConfigError("phi_grid", f"{phi} gives a non-stationary AR(1); need |phi| < 1")
        for rate in self.dropout_grid:
            if not 0.0 <= rate < 1.0:
                raise ConfigError("dropout_grid", f"{rate} outside [0, 1)")
            if missing_count(rate, self.series_length) > self.series_length - 1:
                raise ConfigError("dropout_grid",
                                  f"{rate} would drop every value of a length-{self.series_length} series")

    def to_dict(self):
        """Plain-JSON form; ``from_dict(to_dict())`` reproduces the config exactly."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, enum.Enum):
                value = value.value
            elif f.name == "methods":
                value = [m.value for m in value]
            elif isinstance(value, tuple):
                value = list(value)
            out[f.name] = value
        return out

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(unknown[0], "unknown configuration key")
        return cls(**data)


def preset(name, **overrides):
    try:
        base = PRESETS[name]
    except KeyError:
        raise ConfigError("preset", f"unknown preset {name!r} (expected one of {', '.join(PRESETS)})") from None
    return ExperimentConfig(**{**base, **overrides})


@dataclass(frozen=True)
class ReplicateResult:
    phi: float
    dropout: float
    method: ImputationMethod
    replicate_index: int
    score: float
    replicate_seed: int


@dataclass(frozen=True)
class AggregateResult:
    phi: float
    dropout: float
    method: ImputationMethod
    mean_score: float
    std_score: float
    replicates: int
    # False when there was a single replicate and std_score is a placeholder 0
    std_defined: bool = True


@dataclass
class GridResult:
    config: ExperimentConfig
    aggregates: list
    replicates: list
    failures: dict = field(default_factory=dict)

    def cell(self, phi, dropout, method):
        method = ImputationMethod(method)
        for agg in self.aggregates:
            if agg.phi == phi and agg.dropout == dropout and agg.method is method:
                return agg
        raise KeyError((phi, dropout, method))


def cell_key(phi, dropout, method):
    """Sort key giving lexicographic (phi, dropout, method-name) order."""
    return (phi, dropout, ImputationMethod(method).value)


def replicate_streams(replicate_seed):
    """Seeds for the simulation and the dropout draw of one replicate."""
    return derive_seed(replicate_seed, 0), derive_seed(replicate_seed, 1)


def _reference(series, phi, baseline, estimator, normalization):
    if baseline is BaselineMode.THEORETICAL_PHI:
        return phi
    return sample_pacf(series, 1, estimator, normalization)[1]


def _score_methods(sim, dropout, methods, baseline, estimator, normalization):
    """Score one simulated-and-corrupted series under several methods.

    Returns ``{method: score}``; a method whose fill or estimate fails maps to
    the raised exception instead of a score.
    """
    phi = sim.model.coefficients[0]
    series = simulate(sim)
    out = {}
    try:
        reference = _reference(series, phi, baseline, estimator, normalization)
        masked = drop_values(series, dropout)
    except FillbenchError as exc:
        return {m: exc for m in methods}
    for method in methods:
        try:
            restored = impute(masked, method)
            alpha1 = sample_pacf(restored, 1, estimator, normalization)[1]
            out[method] = score_difference(alpha1, reference)
        except FillbenchError as exc:
            out[method] = exc
    return out


def run_replicate(sim, dropout, method, baseline=BaselineMode.UNCORRUPTED_SAMPLE_PACF,
                  estimator=Estimator.YULE_WALKER, normalization=Normalization.UNBIASED,
                  replicate_index=0, replicate_seed=None):
    """Simulate, corrupt, restore with ``method`` and score a single series.

    Calling this with the same ``sim`` and ``dropout`` for each method gives
    the paired comparison used by ``run_grid``. Errors from imputation or
    estimation propagate.
    """
    method = ImputationMethod(method)
    result = _score_methods(sim, dropout, (method,), BaselineMode(baseline),
                            Estimator(estimator), Normalization(normalization))[method]
    if isinstance(result, Exception):
        raise result
    return ReplicateResult(
        phi=sim.model.coefficients[0],
        dropout=dropout.rate,
        method=method,
        replicate_index=replicate_index,
        score=result,
        replicate_seed=sim.seed if replicate_seed is None else replicate_seed,
    )


def _run_cell(config, phi_idx, rate_idx):
    phi = config.phi_grid[phi_idx]
    rate = config.dropout_grid[rate_idx]
    model = ArModel.ar1(phi, config.noise_std)
    results, failures = [], defaultdict(int)
    for i in range(config.replicates):
        rep_seed = derive_seed(config.master_seed, phi_idx, rate_idx, i)
        sim_seed, drop_seed = replicate_streams(rep_seed)
        sim = SimulationSpec(model, config.series_length, sim_seed)
        scores = _score_methods(sim, DropoutSpec(rate, drop_seed), config.methods,
                                config.baseline, config.estimator, config.normalization)
        for method, score in scores.items():
            if isinstance(score, Exception):
                failures[method] += 1
            else:
                results.append(ReplicateResult(phi, rate, method, i, score, rep_seed))
    return results, dict(failures)


def aggregate(results):
    """Mean and sample standard deviation (divisor ``max(R - 1, 1)``) of one cell's scores."""
    results = list(results)
    if not results:
        raise ValueError("cannot aggregate an empty result list")
    first = results[0]
    key = (first.phi, first.dropout, first.method)
    if any((r.phi, r.dropout, r.method) != key for r in results):
        raise ValueError("results span more than one (phi, dropout, method) cell")
    scores = np.array([r.score for r in results])
    r = scores.size
    mean = math.fsum(scores) / r
    std = math.sqrt(math.fsum((scores - mean) ** 2) / max(r - 1, 1)) if r > 1 else 0.0
    return AggregateResult(first.phi, first.dropout, first.method, mean, std, r, std_defined=r > 1)


def run_grid(config, jobs=1):
    """Run every (phi, rate) cell and aggregate per (phi, rate, method).

    ``jobs > 1`` spreads cells over worker processes; the output is identical
    to a sequential run.
    """
    cells = [(a, b) for a in range(len(config.phi_grid)) for b in range(len(config.dropout_grid))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_run_cell, [config] * len(cells), *zip(*cells)))
    else:
        outputs = [_run_cell(config, a, b) for a, b in cells]

    replicates, failures = [], {}
    for (a, b), (results, cell_failures) in zip(cells, outputs):
        replicates.extend(results)
        for method, count in cell_failures.items():
            failures[(config.phi_grid[a], config.dropout_grid[b], method)] = count

    for (phi, rate, method), count in failures.items():
        if count > MAX_FAILURE_FRACTION * config.replicates:
            raise GridError((phi, rate, method),
                            f"cell phi={phi}, dropout={rate}, method={method.value}: "
                            f"{count} of {config.replicates} replicates failed")

    replicates.sort(key=lambda r: (*cell_key(r.phi, r.dropout, r.method), r.replicate_index))
    by_cell = defaultdict(list)
    for r in replicates:
        by_cell[(r.phi, r.dropout, r.method)].append(r)
    aggregates = [aggregate(by_cell[k]) for k in sorted(by_cell, key=lambda k: cell_key(*k))]
    return GridResult(config, aggregates, replicates, failures)
