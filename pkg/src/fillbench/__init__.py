"""Benchmark forward, backward and mean fill on simulated AR time series."""

from fillbench.ar_process import (
    ArModel,
    SimulationSpec,
    is_stationary,
    simulate,
    theoretical_acf,
    theoretical_pacf,
)
from fillbench.corruption import DropoutSpec, MaskedSeries, drop_values, missing_count
from fillbench.errors import (
    ConfigError,
    DegenerateSeriesError,
    DomainError,
    FillbenchError,
    GridError,
    InvalidInputError,
    InvalidSpecError,
    NumericalDegeneracyError,
)
from fillbench.experiment import (
    AggregateResult,
    BaselineMode,
    ExperimentConfig,
    GridResult,
    ReplicateResult,
    aggregate,
    preset,
    run_grid,
    run_replicate,
)
from fillbench.imputation import (
    ImputationMethod,
    backward_fill,
    forward_fill,
    impute,
    mean_fill,
)
from fillbench.pacf import (
    AcfEstimate,
    Estimator,
    Normalization,
    PacfEstimate,
    accuracy_score,
    durbin_levinson,
    sample_acf,
    sample_pacf,
    sample_pacf_ols,
    sample_pacf_yw,
    score_difference,
)

__version__ = "0.1.0"

__all__ = [
    "AcfEstimate",
    "AggregateResult",
    "ArModel",
    "BaselineMode",
    "ConfigError",
    "DegenerateSeriesError",
    "DomainError",
    "DropoutSpec",
    "Estimator",
    "ExperimentConfig",
    "FillbenchError",
    "GridError",
    "GridResult",
    "ImputationMethod",
    "InvalidInputError",
    "InvalidSpecError",
    "MaskedSeries",
    "Normalization",
    "NumericalDegeneracyError",
    "PacfEstimate",
    "ReplicateResult",
    "SimulationSpec",
    "accuracy_score",
    "aggregate",
    "backward_fill",
    "drop_values",
    "durbin_levinson",
    "forward_fill",
    "impute",
    "is_stationary",
    "mean_fill",
    "missing_count",
    "preset",
    "run_grid",
    "run_replicate",
    "sample_acf",
    "sample_pacf",
    "sample_pacf_ols",
    "sample_pacf_yw",
    "score_difference",
    "simulate",
    "theoretical_acf",
    "theoretical_pacf",
]
