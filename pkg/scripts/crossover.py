"""Where does mean fill stop beating forward/backward fill?

Sweeps phi on a fine grid for every estimator/baseline combination and prints
the smallest positive phi at which forward or backward fill has the lower
mean score. Alongside it prints the large-n approximation of the lag-1 bias:

    mean fill:      -p * phi
    forward fill:   +p * (1 - phi) * (1 - phi + p * phi)

    python scripts/crossover.py [--replicates 100]
"""
import argparse
import itertools

import numpy as np

from fillbench import ExperimentConfig, run_grid


def approx_crossover(p):
    grid = np.linspace(0.01, 0.99, 9801)
    gap = p * (1 - grid) * (1 - grid + p * grid) - p * grid
    return grid[np.argmax(gap < 0)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--replicates", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    phis = tuple(round(v, 2) for v in np.arange(0.20, 0.66, 0.05))
    rates = (0.10, 0.15, 0.20, 0.25)
    print("approximate crossover:", ", ".join(f"p={p}: {approx_crossover(p):.3f}" for p in rates))
    for baseline, estimator in itertools.product(("sample", "theoretical"), ("yw", "ols")):
        cfg = ExperimentConfig(phi_grid=phis, dropout_grid=rates, replicates=args.replicates,
                               master_seed=args.seed, baseline=baseline, estimator=estimator)
        res = run_grid(cfg)
        first = []
        for p in rates:
            lost = [phi for phi in phis
                    if res.cell(phi, p, "mean").mean_score
                    >= min(res.cell(phi, p, "forward").mean_score, res.cell(phi, p, "backward").mean_score)]
            first.append(f"p={p}: {min(lost) if lost else '-'}")
        print(f"{baseline:>11}/{estimator:<3} first phi where mean fill loses:", ", ".join(first))


if __name__ == "__main__":
    main()
