"""Sweep boards, compare the exact solver with the closed form, save the report.

    python scripts/reproduce_theorem.py --n-max 8 --jobs 4 --out results/sweep.txt
"""

import argparse
import sys
import time
from pathlib import Path

from prism_bishops.sweep import run_verification_sweep, sweep_pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="results/sweep.txt")
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_verification_sweep(
        sweep_pairs(args.n_min, args.n_max, args.m_max), jobs=args.jobs, periodicity=True
    )
    text = report.to_text()
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    print(text.splitlines()[-1], f"in {time.perf_counter() - t0:.1f}s -> {out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
