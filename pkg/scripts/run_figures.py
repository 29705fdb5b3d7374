"""Run the 'figures' grid and print one table per dropout rate.

    python scripts/run_figures.py [--out results/figures] [--seed 0] [--jobs 4]
"""
import argparse
import time

from fillbench import __version__, preset, run_grid
from fillbench.report import RunManifest, emit_plot_data, write_results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/figures")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--replicates", type=int, default=100)
    ap.add_argument("--baseline", default="sample", choices=["sample", "theoretical"])
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    config = preset("figures", master_seed=args.seed, replicates=args.replicates, baseline=args.baseline)
    t0 = time.time()
    result = run_grid(config, jobs=args.jobs)
    print(f"{len(result.replicates)} scores in {time.time() - t0:.1f}s")

    for rate in config.dropout_grid:
        print(f"\ndropout {rate:.0%}")
        print(f"{'phi':>6} {'forward':>9} {'backward':>9} {'mean':>9}  best")
        for phi, fwd, bwd, mean in emit_plot_data(result.aggregates, rate):
            best = min((fwd, "forward"), (bwd, "backward"), (mean, "mean"))[1]
            print(f"{phi:6.1f} {fwd:9.4f} {bwd:9.4f} {mean:9.4f}  {best}")

    manifest = RunManifest(config, __version__, config.master_seed, "", "", result.failures)
    write_results(result.aggregates, result.replicates, manifest, args.out)
    print(f"\nwrote {args.out}/")


if __name__ == "__main__":
    main()
