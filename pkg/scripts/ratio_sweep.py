#!/usr/bin/env python3
"""Sweep instance sizes and measure achieved approximation ratios.

For each n, draws random instances, solves with both DkS backends and
compares against the exact oracle.  Prints per-(n, backend) summary rows
with mean/min ratio and the guaranteed worst-case floor for reference.

Usage:
    python scripts/ratio_sweep.py --n 6 8 10 12 --trials 25 --seed 1
"""

import argparse
import statistics
import sys
import time
from fractions import Fraction

from qkpapprox import SolveConfig, exact_qkp, guaranteed_floor, random_instance, solve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[6, 8, 10, 12, 14])
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--density", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    print(f"{'n':>4} {'backend':>8} {'mean':>8} {'min':>8} {'floor':>12} {'ms/solve':>9}")
    for n in args.n:
        for backend in ("greedy", "exact"):
            cfg = SolveConfig(dks_backend=backend)
            ratios = []
            elapsed = 0.0
            for trial in range(args.trials):
                inst = random_instance(
                    n=n,
                    density=args.density,
                    max_cost=15,
                    max_profit=25,
                    limit_frac=Fraction(1, 2),
                    seed=args.seed * 10_000 + n * 100 + trial,
                )
                opt = exact_qkp(inst).total_profit
                t0 = time.perf_counter()
                sol, _ = solve(inst, cfg)
                elapsed += time.perf_counter() - t0
                if opt > 0:
                    ratios.append(float(Fraction(sol.total_profit) / Fraction(opt)))
            mean = statistics.fmean(ratios) if ratios else 1.0
            lo = min(ratios) if ratios else 1.0
            print(
                f"{n:>4} {backend:>8} {mean:>8.4f} {lo:>8.4f} "
                f"{float(guaranteed_floor(n)):>12.8f} {1000*elapsed/args.trials:>9.2f}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
