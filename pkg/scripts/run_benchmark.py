#!/usr/bin/env python3
"""Run the rebuild-vs-incremental timing ladder and write a CSV report.

    python scripts/run_benchmark.py --out results/timings.csv
    python scripts/run_benchmark.py --sizes 500:25,1000:50 --trials 3
"""

import argparse
import sys
from pathlib import Path

from covrough.bench import DEFAULT_LADDER, ExperimentConfig, format_summary, run_experiment


def parse_sizes(text):
    return [tuple(int(v) for v in item.split(":")) for item in text.split(",") if item.strip()]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=parse_sizes, default=list(DEFAULT_LADDER))
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--out", type=Path, default=Path("timings.csv"))
    args = p.parse_args()

    args.out.parent.mkdir(parents=True, exist_ok=True)
    cfg = ExperimentConfig(args.sizes, args.trials, args.seed, args.out, args.density)
    records = run_experiment(cfg, progress=lambda s: print(s, file=sys.stderr))
    print(format_summary(records))
    print(f"\n{len(records)} records written to {args.out}")


if __name__ == "__main__":
    main()
