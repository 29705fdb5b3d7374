"""Result files, figure tables and the single-series walk-through.

Output directory layout written by :func:`write_results`::

    aggregate.csv            phi,dropout,method,mean_score,std_score,replicates
    replicates.csv           phi,dropout,method,replicate_index,score,replicate_seed
    figure_dropout_<p>.csv   phi,forward_mean,backward_mean,mean_fill_mean
    manifest.json            config echo, version, seed, timestamps, failures

Reals are written with 17 significant digits so that reading a file back
gives the identical doubles.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from fillbench.ar_process import ArModel, SimulationSpec, simulate, theoretical_pacf
from fillbench.corruption import DropoutSpec, drop_values
from fillbench.errors import FillbenchError
from fillbench.experiment import (
    ALL_METHODS,
    AggregateResult,
    BaselineMode,
    ExperimentConfig,
    cell_key,
    replicate_streams,
)
from fillbench.imputation import ImputationMethod, impute
from fillbench.pacf import Estimator, Normalization, sample_pacf, score_difference

AGGREGATE_HEADER = ["phi", "dropout", "method", "mean_score", "std_score", "replicates"]
REPLICATE_HEADER = ["phi", "dropout", "method", "replicate_index", "score", "replicate_seed"]
PLOT_COLUMNS = {
    ImputationMethod.FORWARD_FILL: "forward_mean",
    ImputationMethod.BACKWARD_FILL: "backward_mean",
    ImputationMethod.MEAN_FILL: "mean_fill_mean",
}
PLOT_HEADER = ["phi", *PLOT_COLUMNS.values()]


class DropoutNotFoundError(FillbenchError, LookupError):
    pass


def fmt_real(x):
    return format(float(x), ".17g")


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def aggregate_csv(aggregates):
    rows = sorted(aggregates, key=lambda a: cell_key(a.phi, a.dropout, a.method))
    return _csv_text(AGGREGATE_HEADER, [
        [fmt_real(a.phi), fmt_real(a.dropout), a.method.value,
         fmt_real(a.mean_score), fmt_real(a.std_score), a.replicates]
        for a in rows
    ])


def replicates_csv(replicates):
    return _csv_text(REPLICATE_HEADER, [
        [fmt_real(r.phi), fmt_real(r.dropout), r.method.value, r.replicate_index,
         fmt_real(r.score), r.replicate_seed]
        for r in replicates
    ])


def read_aggregate_csv(path):
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != AGGREGATE_HEADER:
            raise ValueError(f"unexpected aggregate.csv header {reader.fieldnames}")
        out = []
        for row in reader:
            n = int(row["replicates"])
            out.append(AggregateResult(
                float(row["phi"]), float(row["dropout"]), ImputationMethod(row["method"]),
                float(row["mean_score"]), float(row["std_score"]), n, std_defined=n > 1,
            ))
    return out


def emit_plot_data(aggregates, dropout):
    """Rows ``[phi, forward_mean, backward_mean, mean_fill_mean]`` for one dropout rate, sorted by phi.

    A method missing from the results leaves ``None`` in its column.
    """
    available = sorted({a.dropout for a in aggregates})
    if dropout not in available:
        raise DropoutNotFoundError(
            f"dropout {dropout} not in results; available rates: {', '.join(map(str, available))}")
    table = {}
    for a in aggregates:
        if a.dropout == dropout:
            table.setdefault(a.phi, dict.fromkeys(PLOT_COLUMNS))[a.method] = a.mean_score
    return [[phi, *(table[phi][m] for m in PLOT_COLUMNS)] for phi in sorted(table)]


def plot_data_csv(rows):
    return _csv_text(PLOT_HEADER, [
        [fmt_real(r[0]), *("" if v is None else fmt_real(v) for v in r[1:])] for r in rows
    ])


@dataclass
class RunManifest:
    config: ExperimentConfig
    tool_version: str
    master_seed: int
    started: str
    finished: str
    failure_counts: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "tool_version": self.tool_version,
            "master_seed": self.master_seed,
            "started": self.started,
            "finished": self.finished,
            "config": self.config.to_dict(),
            "failure_counts": [
                {"phi": phi, "dropout": rate, "method": ImputationMethod(m).value, "failures": n}
                for (phi, rate, m), n in sorted(self.failure_counts.items(), key=lambda kv: cell_key(*kv[0]))
            ],
        }

    @classmethod
    def from_dict(cls, data):
        failures = {
            (f["phi"], f["dropout"], ImputationMethod(f["method"])): f["failures"]
            for f in data.get("failure_counts", [])
        }
        return cls(ExperimentConfig.from_dict(data["config"]), data["tool_version"],
                   data["master_seed"], data["started"], data["finished"], failures)


def read_manifest(path):
    with open(path) as fh:
        return RunManifest.from_dict(json.load(fh))


def plot_filename(rate):
    return f"figure_dropout_{fmt_real(rate)}.csv"


def write_results(aggregates, replicates, manifest, out_dir):
    """Write all result files into ``out_dir`` (created if needed); return the paths written.

    Everything except the timestamps in ``manifest.json`` is a pure function of
    the config, so repeat runs give byte-identical CSV files.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "aggregate.csv": aggregate_csv(aggregates),
        "replicates.csv": replicates_csv(replicates),
    }
    for rate in sorted({a.dropout for a in aggregates}):
        files[plot_filename(rate)] = plot_data_csv(emit_plot_data(aggregates, rate))
    files["manifest.json"] = json.dumps(manifest.to_dict(), indent=2) + "\n"
    written = []
    for name, text in files.items():
        path = out / name
        with open(path, "w", newline="") as fh:
            fh.write(text)
        written.append(path)
    return written


def demo_single(phi, dropout, seed, length=500, baseline=BaselineMode.UNCORRUPTED_SAMPLE_PACF,
                estimator=Estimator.YULE_WALKER, normalization=Normalization.UNBIASED, noise_std=1.0):
    """Walk one series through simulate -> drop -> fill -> PACF -> score.

    Returns a JSON-ready dict with the original series, the missing indices,
    the three restored series, lag-1 PACF values and scores.
    """
    baseline = BaselineMode(baseline)
    estimator = Estimator(estimator)
    normalization = Normalization(normalization)
    model = ArModel.ar1(phi, noise_std)
    sim_seed, drop_seed = replicate_streams(seed)
    original = simulate(SimulationSpec(model, length, sim_seed))
    masked = drop_values(original, DropoutSpec(dropout, drop_seed))

    pacf_original = sample_pacf(original, 1, estimator, normalization)[1]
    reference = phi if baseline is BaselineMode.THEORETICAL_PHI else pacf_original
    restored, pacf1, scores = {}, {"original": pacf_original}, {}
    for method in ALL_METHODS:
        filled = impute(masked, method)
        alpha1 = sample_pacf(filled, 1, estimator, normalization)[1]
        restored[method.value] = filled.tolist()
        pacf1[method.value] = alpha1
        scores[method.value] = score_difference(alpha1, reference)

    return {
        "phi": float(phi),
        "dropout": float(dropout),
        "seed": int(seed),
        "series_length": int(length),
        "baseline": baseline.value,
        "estimator": estimator.value,
        "normalization": normalization.value,
        "theoretical_pacf1": float(theoretical_pacf(model, 1)[0]),
        "reference_pacf1": float(reference),
        "original": original.tolist(),
        "missing": sorted(masked.missing),
        "restored": restored,
        "pacf1": pacf1,
        "scores": scores,
    }
