"""Train all six shipped configurations and print a signal x transform summary.

Runs are cached under ``runs/`` (keyed by config and source digest), so a second
invocation only re-renders the table.  One full run is 10K steps at d=33.

    python3 demos/full_runs.py [--seeds 0 1 2] [--steps N]
"""
import argparse
import logging
from pathlib import Path

from symforge import cli, reproduce

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--steps", type=int)
    ap.add_argument("--cache", default=str(ROOT / "runs"))
    ap.add_argument("--progress", type=int, default=1000)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    overrides = {"steps": args.steps} if args.steps else {}
    reports = []
    for path in sorted((ROOT / "configs").glob("*.json")):
        for seed in args.seeds:
            cfg = reproduce.resolved(path, seed, **overrides)
            rep = reproduce.run(cfg, args.cache, args.progress)
            print(f"{path.stem:24s} seed {seed}: cos {rep['cosine_similarity']:.4f} "
                  f"rmse {rep['rmse']:.4f} p* {rep['minimal_power']} "
                  f"recon {rep['reconstruction_rmse']:.3f} ({rep['train_seconds'] / 60:.1f} min)")
            if seed == args.seeds[0]:
                reports.append(rep)
    table, _ = cli.report_table(reports)
    print()
    print(table)


if __name__ == "__main__":
    main()
