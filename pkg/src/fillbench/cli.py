"""Command-line interface.

    fillbench run   [--preset figures|methodology] [--config FILE] [grid flags] --out DIR
    fillbench demo  [--phi 0.4] [--rate 0.2] [--seed S] [--out FILE]
    fillbench pacf  SERIES.csv [--max-lag H] [--method M]
    fillbench impute SERIES.csv --method forward|backward|mean

Exit status: 0 ok, 2 configuration error, 3 grid error, 4 I/O error,
5 unusable input data.
"""
import argparse
import csv
import json
import logging
import math
import sys
from datetime import datetime, timezone

import numpy as np

from fillbench import __version__
from fillbench.corruption import MaskedSeries
from fillbench.errors import ConfigError, FillbenchError, GridError
from fillbench.experiment import PRESETS, ExperimentConfig, run_grid
from fillbench.imputation import ImputationMethod, impute
from fillbench.pacf import sample_pacf
from fillbench.report import RunManifest, demo_single, fmt_real, write_results

log = logging.getLogger("fillbench")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GRID = 3
EXIT_IO = 4
EXIT_INPUT = 5

FLAG_FIELDS = {
    "phi": "phi_grid",
    "rates": "dropout_grid",
    "replicates": "replicates",
    "length": "series_length",
    "seed": "master_seed",
    "baseline": "baseline",
    "estimator": "estimator",
    "normalization": "normalization",
}


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}") from None


def parse_config(flags=None, config_path=None):
    """Build an ExperimentConfig; flags override the config file, which overrides the preset.

    ``flags`` maps CLI flag names (``phi``, ``rates``, ``replicates``,
    ``length``, ``seed``, ``baseline``, ``estimator``, ``normalization``,
    ``preset``) to values; ``None`` means "not given".
    """
    flags = {k: v for k, v in (flags or {}).items() if v is not None}
    file_data = {}
    if config_path is not None:
        try:
            with open(config_path) as fh:
                file_data = json.load(fh)
        except OSError as exc:
            raise ConfigError("config", f"cannot read {config_path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError("config", f"{config_path} is not valid JSON: {exc}") from None
        if not isinstance(file_data, dict):
            raise ConfigError("config", "top level of the config file must be an object")
        file_data = dict(file_data)

    file_preset = file_data.pop("preset", None)
    name = flags.pop("preset", None) or file_preset or "figures"
    if name not in PRESETS:
        raise ConfigError("preset", f"unknown preset {name!r} (expected one of {', '.join(PRESETS)})")

    known = {f for f in ExperimentConfig.__dataclass_fields__}
    for key in file_data:
        if key not in known:
            raise ConfigError(key, "unknown configuration key")
    settings = {**PRESETS[name], **file_data}
    for flag, value in flags.items():
        if flag not in FLAG_FIELDS:
            raise ConfigError(flag, "unknown flag")
        settings[FLAG_FIELDS[flag]] = value
    return ExperimentConfig(**settings)


def _add_grid_flags(p):
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--config", help="JSON file with ExperimentConfig fields")
    p.add_argument("--phi", type=_float_list, help="comma-separated AR(1) coefficients")
    p.add_argument("--rates", type=_float_list, help="comma-separated dropout rates")
    p.add_argument("--replicates", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--seed", type=int)
    _add_estimation_flags(p)


def _add_estimation_flags(p, defaults=False):
    p.add_argument("--baseline", choices=["sample", "theoretical"], default="sample" if defaults else None)
    p.add_argument("--estimator", choices=["yw", "ols"], default="yw" if defaults else None)
    p.add_argument("--normalization", choices=["biased", "unbiased"], default="unbiased" if defaults else None)


def build_parser():
    parser = argparse.ArgumentParser(prog="fillbench", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the full experiment grid")
    _add_grid_flags(run)
    run.add_argument("--out", default="results", help="output directory")
    run.add_argument("--jobs", type=int, default=1, help="worker processes")

    demo = sub.add_parser("demo", help="walk a single series through the pipeline")
    demo.add_argument("--phi", type=float, default=0.4)
    demo.add_argument("--rate", type=float, default=0.20)
    demo.add_argument("--seed", type=int, default=0)
    demo.add_argument("--length", type=int, default=500)
    _add_estimation_flags(demo, defaults=True)
    demo.add_argument("--out", help="write the JSON record here instead of stdout")

    pacf = sub.add_parser("pacf", help="sample PACF of a single-column CSV series")
    pacf.add_argument("input")
    pacf.add_argument("--header", action="store_true", help="first row is a header")
    pacf.add_argument("--max-lag", type=int, default=10)
    pacf.add_argument("--estimator", choices=["yw", "ols"], default="yw")
    pacf.add_argument("--normalization", choices=["biased", "unbiased"], default="unbiased")
    pacf.add_argument("--method", choices=[m.value for m in ImputationMethod],
                      help="fill missing values with this method first")
    pacf.add_argument("--out")

    imp = sub.add_parser("impute", help="fill missing values of a single-column CSV series")
    imp.add_argument("input")
    imp.add_argument("--header", action="store_true", help="first row is a header")
    imp.add_argument("--method", choices=[m.value for m in ImputationMethod], required=True)
    imp.add_argument("--out")
    return parser


def read_series_csv(path, header=False):
    """Read a single-column CSV; empty fields are missing values."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if header:
        rows = rows[1:]
    values = []
    for lineno, row in enumerate(rows, start=2 if header else 1):
        if len(row) > 1:
            raise FillbenchError(f"{path}:{lineno}: expected one column, got {len(row)}")
        text = row[0].strip() if row else ""
        if not text:
            values.append(None)
            continue
        try:
            v = float(text)
        except ValueError:
            raise FillbenchError(f"{path}:{lineno}: not a number: {text!r}") from None
        values.append(None if math.isnan(v) else v)
    return MaskedSeries.from_optional(values)


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _utc_now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def cmd_run(args):
    flags = {name: getattr(args, name) for name in (*FLAG_FIELDS, "preset")}
    config = parse_config(flags, args.config)
    started = _utc_now()
    log.info("running %d x %d cells, %d replicates each",
             len(config.phi_grid), len(config.dropout_grid), config.replicates)
    result = run_grid(config, jobs=args.jobs)
    manifest = RunManifest(config, __version__, config.master_seed, started, _utc_now(), result.failures)
    for path in write_results(result.aggregates, result.replicates, manifest, args.out):
        log.info("wrote %s", path)
    return EXIT_OK


def cmd_demo(args):
    record = demo_single(args.phi, args.rate, args.seed, args.length,
                         args.baseline, args.estimator, args.normalization)
    _emit(json.dumps(record, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_pacf(args):
    series = read_series_csv(args.input, args.header)
    if series.missing:
        if args.method is None:
            raise FillbenchError(f"{args.input} has {len(series.missing)} missing values; pass --method to fill them")
        values = impute(series, args.method)
    else:
        values = np.asarray(series.values)
    est = sample_pacf(values, args.max_lag, args.estimator, args.normalization)
    rows = "".join(f"{h},{fmt_real(v)}\n" for h, v in enumerate(est.values, start=1))
    _emit("lag,pacf\n" + rows, args.out)
    return EXIT_OK


def cmd_impute(args):
    series = read_series_csv(args.input, args.header)
    filled = impute(series, args.method)
    _emit("".join(fmt_real(v) + "\n" for v in filled), args.out)
    return EXIT_OK


COMMANDS = {"run": cmd_run, "demo": cmd_demo, "pacf": cmd_pacf, "impute": cmd_impute}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GridError as exc:
        print(f"grid error: {exc}", file=sys.stderr)
        return EXIT_GRID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FillbenchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
