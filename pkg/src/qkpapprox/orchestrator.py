"""The end-to-end approximation pipeline.

Prepare, decompose, solve every sub-instance, lift each candidate back to
original ids, union the always-include vertices, and return the feasible
candidate with the best profit measured on the original (unrounded)
instance.  A universal fallback scan over single vertices and edge pairs
guards every degenerate path.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .classsolvers import (
    DEFAULT_REPLICATION_CAP,
    ClassOutcome,
    solve_class2,
    solve_class3,
    solve_class4,
    solve_class5,
)
from .decompose import decompose
from .dks import DksBackend, get_backend
from .instance import QkpInstance, Solution, evaluate, validate
from .knapsack import knapsack_fptas
from .preprocess import prepare
from .rational import Rational, ceil_log2, rational_to_json


@dataclass(frozen=True)
class SolveConfig:
    """Tunables for one solve run."""

    dks_backend: Union[str, DksBackend] = "greedy"
    knapsack_eps: Rational = Fraction(1, 4)
    alpha_override: Optional[Rational] = None
    replication_cap: int = DEFAULT_REPLICATION_CAP
    seed: int = 0

    def __post_init__(self):
        if not 0 < Fraction(self.knapsack_eps) < 1:
            raise ValueError(f"knapsack_eps must be in (0,1), got {self.knapsack_eps}")
        if self.alpha_override is not None and not (
            0 <= Fraction(self.alpha_override) < 1
        ):
            raise ValueError(f"alpha_override must be in [0,1), got {self.alpha_override}")

    def backend(self) -> DksBackend:
        if isinstance(self.dks_backend, DksBackend):
            return self.dks_backend
        return get_backend(self.dks_backend)


@dataclass(frozen=True)
class SubRecord:
    """One candidate: which sub-instance (or the fallback scan) produced it."""

    class_tag: int  # 0 marks the singleton/edge-pair fallback scan
    case: str
    fallbacks: tuple[str, ...]
    size: int
    cost: Rational
    profit: Rational
    feasible: bool

    def to_json_obj(self) -> dict:
        return {
            "class": self.class_tag,
            "case": self.case,
            "fallbacks": list(self.fallbacks),
            "size": self.size,
            "cost": rational_to_json(self.cost),
            "profit": rational_to_json(self.profit),
            "feasible": self.feasible,
        }


@dataclass(frozen=True)
class RunReport:
    records: tuple[SubRecord, ...]
    best_profit: Rational
    best_vertices: tuple[int, ...]
    best_class: int
    backend_name: str
    knapsack_eps: Rational
    wall_ms: float

    def to_json_obj(self, include_timing: bool = True) -> dict:
        obj = {
            "records": [r.to_json_obj() for r in self.records],
            "best": {
                "profit": rational_to_json(self.best_profit),
                "vertices": list(self.best_vertices),
                "class": self.best_class,
            },
            "backend": self.backend_name,
            "knapsack_eps": rational_to_json(self.knapsack_eps),
        }
        if include_timing:
            obj["wall_ms"] = round(self.wall_ms, 3)
        return obj


def guaranteed_floor(n: int) -> Fraction:
    """Worst-case ALG/OPT floor with the exact DkS backend.

    Combines the rounding loss (4), the worst per-class constant (16) and
    the sub-instance count ceiling 2*(ceil(log2 n)+1)^3 + 1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(1, 64 * (2 * (ceil_log2(n) + 1) ** 3 + 1))


def _solve_sub(sub, backend, cfg):
    if sub.class_tag == 1:
        items = [(sub.scaled_cost[v], sub.vertex_profit[v]) for v in sub.vertices]
        picked = knapsack_fptas(items, sub.scaled_limit, cfg.knapsack_eps)
        return ClassOutcome(tuple(sub.vertices[i] for i in picked), "knapsack")
    if sub.class_tag == 2:
        return solve_class2(sub)
    if sub.class_tag == 3:
        return solve_class3(sub, backend)
    if sub.class_tag == 4:
        return solve_class4(sub, eps=cfg.knapsack_eps)
    return solve_class5(
        sub,
        backend,
        alpha=cfg.alpha_override,
        replication_cap=cfg.replication_cap,
        eps=cfg.knapsack_eps,
    )


def solve(inst: QkpInstance, cfg: SolveConfig | None = None) -> tuple[Solution, RunReport]:
    """Best feasible solution among all class candidates and fallbacks.

    Candidates are always re-evaluated against the original, unrounded
    profits; ties between equal-profit candidates go to the
    lexicographically smallest vertex set.
    """
    cfg = cfg or SolveConfig()
    problems = validate(inst)
    if problems:
        raise ValueError("invalid instance: " + "; ".join(problems))
    backend = cfg.backend()

    t0 = time.perf_counter()
    prep = prepare(inst)
    subs = decompose(prep)
    always = frozenset(prep.always_include)

    best_profit = None
    best_verts: tuple[int, ...] = ()
    best_class = 0

    def offer(profit, verts: tuple[int, ...], class_tag: int):
        nonlocal best_profit, best_verts, best_class
        if (
            best_profit is None
            or profit > best_profit
            or (profit == best_profit and verts < best_verts)
        ):
            best_profit = profit
            best_verts = verts
            best_class = class_tag

    records = []
    for sub in subs:
        outcome = _solve_sub(sub, backend, cfg)
        lifted = frozenset(prep.orig_of[r] for r in outcome.vertices) | always
        cost, profit = evaluate(inst, lifted)
        feasible = cost <= inst.limit
        if feasible:
            offer(profit, tuple(sorted(lifted)), sub.class_tag)
        records.append(
            SubRecord(
                class_tag=sub.class_tag,
                case=outcome.case,
                fallbacks=outcome.fallbacks,
                size=len(lifted),
                cost=cost,
                profit=profit,
                feasible=feasible,
            )
        )

    # universal fallback scan: the always-include set alone, every feasible
    # single vertex and every feasible edge pair (each unioned with the
    # zero-cost always-include set, which never adds cost)
    base_cost, base_profit = evaluate(inst, always)
    attach = [0] * inst.n
    for u, v, p in inst.edges:
        if u in always and v not in always:
            attach[v] += p
        elif v in always and u not in always:
            attach[u] += p

    scan_best_profit = base_profit
    scan_best_verts = tuple(sorted(always))
    scan_best_size = len(always)

    def offer_scan(profit, verts):
        nonlocal scan_best_profit, scan_best_verts, scan_best_size
        if profit > scan_best_profit or (
            profit == scan_best_profit and verts < scan_best_verts
        ):
            scan_best_profit = profit
            scan_best_verts = verts
            scan_best_size = len(verts)

    for v in range(inst.n):
        if v not in always and inst.cost[v] <= inst.limit:
            profit = base_profit + inst.vprofit[v] + attach[v]
            offer_scan(profit, tuple(sorted(always | {v})))
    for u, v, p in inst.edges:
        if u in always or v in always:
            continue
        if inst.cost[u] + inst.cost[v] <= inst.limit:
            profit = (
                base_profit
                + inst.vprofit[u]
                + inst.vprofit[v]
                + p
                + attach[u]
                + attach[v]
            )
            offer_scan(profit, tuple(sorted(always | {u, v})))

    offer(scan_best_profit, scan_best_verts, 0)
    scan_cost, scan_profit = evaluate(inst, scan_best_verts)
    records.append(
        SubRecord(
            class_tag=0,
            case="singleton_pair_scan",
            fallbacks=(),
            size=scan_best_size,
            cost=scan_cost,
            profit=scan_profit,
            feasible=True,
        )
    )

    cost, profit = evaluate(inst, best_verts)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    solution = Solution(best_verts, cost, profit)
    report = RunReport(
        records=tuple(records),
        best_profit=profit,
        best_vertices=best_verts,
        best_class=best_class,
        backend_name=backend.name,
        knapsack_eps=cfg.knapsack_eps,
        wall_ms=wall_ms,
    )
    return solution, report
