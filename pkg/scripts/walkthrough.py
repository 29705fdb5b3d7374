"""Single-series walk-through: one AR(1) path, 20% dropped, three fills.

    python scripts/walkthrough.py [--phi 0.4] [--rate 0.2] [--seed 0]
"""
import argparse

from fillbench.report import demo_single


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--phi", type=float, default=0.4)
    ap.add_argument("--rate", type=float, default=0.2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--length", type=int, default=500)
    args = ap.parse_args()

    rec = demo_single(args.phi, args.rate, args.seed, args.length)
    print(f"AR(1) phi={rec['phi']}, n={rec['series_length']}, {len(rec['missing'])} values dropped")
    print(f"theoretical PACF(1)  {rec['theoretical_pacf1']:.3f}")
    print(f"original sample PACF {rec['pacf1']['original']:.3f}")
    for method in ("forward", "backward", "mean"):
        print(f"{method:>8} fill: PACF {rec['pacf1'][method]:.3f}  score {rec['scores'][method]:.3f}")


if __name__ == "__main__":
    main()
