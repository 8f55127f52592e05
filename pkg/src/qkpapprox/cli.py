"""Command-line front end: solve, generate, bench and verify commands.

Instances travel as canonical JSON documents; rationals serialize as
"p/q" strings when non-integral.  All commands are deterministic for a
fixed seed and configuration.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .decompose import decompose
from .errors import CapacityError
from .generate import random_instance
from .instance import (
    dumps_canonical,
    evaluate,
    instance_to_json_obj,
    load_instance,
    validate,
)
from .oracle import exact_qkp
from .orchestrator import SolveConfig, guaranteed_floor, solve
from .preprocess import prepare
from .rational import as_rational, rational_from_json, rational_to_json


def _rational_arg(text: str):
    try:
        return as_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _solve_one(input_path: str, output_path: str | None, args) -> int:
    try:
        inst = load_instance(input_path)
    except (OSError, ValueError) as exc:
        return _fail(f"cannot read instance: {exc}", 2)
    problems = validate(inst)
    if problems:
        return _fail("invalid instance: " + "; ".join(problems), 2)
    try:
        cfg = SolveConfig(
            dks_backend=args.dks,
            knapsack_eps=args.eps,
            alpha_override=args.alpha,
        )
    except ValueError as exc:
        return _fail(str(exc), 2)
    solution, report = solve(inst, cfg)
    if solution.total_cost > inst.limit:
        return _fail("internal error: infeasible solution produced", 3)
    _write(dumps_canonical(solution.to_json_obj()), output_path)
    if args.report:
        _write(dumps_canonical(report.to_json_obj()), args.report)
    if args.dump_decomposition:
        subs = decompose(prepare(inst))
        _write(
            dumps_canonical([s.to_json_obj() for s in subs]),
            args.dump_decomposition,
        )
    return 0


def cmd_solve(args) -> int:
    if not os.path.isdir(args.input):
        return _solve_one(args.input, args.output, args)
    # batch mode: one instance per file, solutions mirror the file names
    if not args.output:
        return _fail("batch solve needs --output pointing at a directory", 2)
    if args.report or args.dump_decomposition:
        return _fail("--report/--dump-decomposition are single-instance flags", 2)
    os.makedirs(args.output, exist_ok=True)
    names = sorted(
        name for name in os.listdir(args.input) if name.endswith(".json")
    )
    if not names:
        return _fail(f"no .json instances in {args.input}", 2)
    for name in names:
        code = _solve_one(
            os.path.join(args.input, name), os.path.join(args.output, name), args
        )
        if code != 0:
            return code
    return 0


def cmd_generate(args) -> int:
    try:
        inst = random_instance(
            n=args.n,
            density=args.density,
            max_cost=args.max_cost,
            max_profit=args.max_profit,
            limit_frac=args.limit_frac,
            seed=args.seed,
        )
    except ValueError as exc:
        return _fail(str(exc), 2)
    _write(dumps_canonical(instance_to_json_obj(inst)), args.output)
    return 0


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        lo = hi = text
    lo, hi = int(lo), int(hi)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad n-range {text!r}")
    return lo, hi


def cmd_bench(args) -> int:
    try:
        lo, hi = _parse_n_range(args.n_range)
    except ValueError as exc:
        return _fail(str(exc), 2)
    try:
        cfg = SolveConfig(dks_backend=args.dks, knapsack_eps=args.eps)
    except ValueError as exc:
        return _fail(str(exc), 2)

    rows = []
    notices = []
    violations = 0
    for trial in range(args.trials):
        n = lo + (trial % (hi - lo + 1))
        seed = args.seed + trial
        inst = random_instance(
            n=n,
            density=args.density,
            max_cost=args.max_cost,
            max_profit=args.max_profit,
            limit_frac=args.limit_frac,
            seed=seed,
        )
        try:
            opt = exact_qkp(inst)
        except CapacityError:
            notices.append(f"trial {trial}: oracle capacity exceeded at n={n}, skipped")
            continue
        sol, report = solve(inst, cfg)
        floor = guaranteed_floor(n)
        if opt.total_profit > 0:
            ratio = Fraction(sol.total_profit) / Fraction(opt.total_profit)
        else:
            ratio = Fraction(1)
        ok = ratio >= floor
        if args.dks == "exact" and not ok:
            violations += 1
        rows.append(
            {
                "trial": trial,
                "n": n,
                "seed": seed,
                "opt": rational_to_json(opt.total_profit),
                "alg": rational_to_json(sol.total_profit),
                "ratio": float(ratio),
                "floor": float(floor),
                "winner_class": report.best_class,
                "ok": ok,
            }
        )

    rows.sort(key=lambda r: (r["n"], r["seed"]))
    header = f"{'n':>4} {'seed':>8} {'opt':>12} {'alg':>12} {'ratio':>10} {'floor':>12} {'class':>5}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r['n']:>4} {r['seed']:>8} {str(r['opt']):>12} {str(r['alg']):>12} "
            f"{r['ratio']:>10.6f} {r['floor']:>12.8f} {r['winner_class']:>5}"
        )
    for notice in notices:
        lines.append(f"# {notice}")
    print("\n".join(lines))
    if args.json_out:
        _write(dumps_canonical({"rows": rows, "notices": notices}), args.json_out)
    if violations:
        return _fail(
            f"{violations} trial(s) fell below the guaranteed floor with the exact backend",
            1,
        )
    return 0


def cmd_verify(args) -> int:
    try:
        inst = load_instance(args.input)
        with open(args.solution, "r", encoding="utf-8") as fh:
            claimed = json.load(fh, parse_float=Fraction)
        vertices = [int(v) for v in claimed["vertices"]]
        claimed_cost = rational_from_json(claimed["cost"])
        claimed_profit = rational_from_json(claimed["profit"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _fail(f"cannot read inputs: {exc}", 2)

    try:
        cost, profit = evaluate(inst, vertices)
    except ValueError as exc:
        print(f"MISMATCH: {exc}")
        return 1
    issues = []
    if cost > inst.limit:
        issues.append(f"infeasible: cost {cost} exceeds limit {inst.limit}")
    if cost != claimed_cost:
        issues.append(f"cost: claimed {claimed_cost}, recomputed {cost}")
    if profit != claimed_profit:
        issues.append(f"profit: claimed {claimed_profit}, recomputed {profit}")
    if issues:
        for issue in issues:
            print(f"MISMATCH: {issue}")
        return 1
    print("OK")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkp",
        description="Approximate quadratic knapsack solver with DkS backends",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file (or a directory of them)")
    p_solve.add_argument("--input", required=True)
    p_solve.add_argument(
        "--output",
        default=None,
        help="solution JSON (default stdout); a directory in batch mode",
    )
    p_solve.add_argument("--dks", choices=["exact", "greedy"], default="greedy")
    p_solve.add_argument("--eps", type=_rational_arg, default=Fraction(1, 4))
    p_solve.add_argument("--alpha", type=_rational_arg, default=None)
    p_solve.add_argument("--report", default=None, help="write the run report JSON here")
    p_solve.add_argument(
        "--dump-decomposition", default=None, help="write the sub-instance dump here"
    )
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("generate", help="generate a random instance")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--density", type=float, required=True)
    p_gen.add_argument("--max-cost", type=int, default=20)
    p_gen.add_argument("--max-profit", type=int, default=20)
    p_gen.add_argument("--limit-frac", type=_rational_arg, default=Fraction(1, 2))
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", default=None, help="instance JSON (default stdout)")
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser("bench", help="measure ratios against the exact oracle")
    p_bench.add_argument("--trials", type=int, required=True)
    p_bench.add_argument("--n-range", required=True, help="e.g. 6:12")
    p_bench.add_argument("--dks", choices=["exact", "greedy"], default="greedy")
    p_bench.add_argument("--density", type=float, default=0.5)
    p_bench.add_argument("--max-cost", type=int, default=20)
    p_bench.add_argument("--max-profit", type=int, default=20)
    p_bench.add_argument("--limit-frac", type=_rational_arg, default=Fraction(1, 2))
    p_bench.add_argument("--eps", type=_rational_arg, default=Fraction(1, 4))
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--json-out", default=None)
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify", help="check a solution file")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--solution", required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
