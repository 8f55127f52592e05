"""Quadratic knapsack instances and solutions.

An instance is a graph with vertex costs, vertex profits (the diagonal
terms) and nonnegative edge profits, plus a cost limit.  A solution is a
vertex subset; its profit is the sum of vertex profits and induced-edge
profits.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rational import Rational, as_rational, rational_from_json, rational_to_json

Edge = tuple[int, int, Rational]


@dataclass(frozen=True)
class QkpInstance:
    """A QKP instance: vertex costs/profits, weighted edges, cost limit.

    Edges are stored with u < v; there are no self-loops or duplicates in a
    valid instance (see validate).  Instances are immutable.
    """

    n: int
    cost: tuple[Rational, ...]
    vprofit: tuple[Rational, ...]
    edges: tuple[Edge, ...]
    limit: Rational

    def __post_init__(self):
        object.__setattr__(self, "cost", tuple(as_rational(c) for c in self.cost))
        object.__setattr__(self, "vprofit", tuple(as_rational(p) for p in self.vprofit))
        canon = []
        for u, v, p in self.edges:
            if v < u:
                u, v = v, u
            canon.append((u, v, as_rational(p)))
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "limit", as_rational(self.limit))
        object.__setattr__(self, "_adj", None)

    def adjacency(self) -> tuple[tuple[tuple[int, Rational], ...], ...]:
        """Per-vertex sorted (neighbor, edge profit) lists; O(deg) queries."""
        if self._adj is None:
            nbrs: list[list[tuple[int, Rational]]] = [[] for _ in range(self.n)]
            for u, v, p in self.edges:
                if 0 <= u < self.n and 0 <= v < self.n and u != v:
                    nbrs[u].append((v, p))
                    nbrs[v].append((u, p))
            object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in nbrs))
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def total_cost(self) -> Rational:
        return sum(self.cost)

    def total_profit(self) -> Rational:
        return sum(self.vprofit) + sum(p for _, _, p in self.edges)


@dataclass(frozen=True)
class Solution:
    """A vertex subset with its cost and profit on the owning instance."""

    vertices: tuple[int, ...]
    total_cost: Rational
    total_profit: Rational

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "cost": rational_to_json(self.total_cost),
            "profit": rational_to_json(self.total_profit),
        }


def _check_ids(inst: QkpInstance, subset: Iterable[int]) -> frozenset:
    chosen = frozenset(subset)
    for v in chosen:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < inst.n:
            raise ValueError(f"invalid vertex id {v!r} for instance with n={inst.n}")
    return chosen


def evaluate(inst: QkpInstance, subset: Iterable[int]) -> tuple[Rational, Rational]:
    """Cost and profit of the induced subgraph on `subset`.

    Profit is the sum of vertex profits plus profits of edges with both
    endpoints selected.  Raises ValueError on an invalid vertex id.
    """
    chosen = _check_ids(inst, subset)
    cost = sum((inst.cost[v] for v in chosen), 0)
    profit = sum((inst.vprofit[v] for v in chosen), 0)
    adj = inst.adjacency()
    for u in chosen:
        for v, p in adj[u]:
            if v > u and v in chosen:
                profit += p
    return cost, profit


def is_feasible(inst: QkpInstance, subset: Iterable[int]) -> bool:
    """True iff the subset's total cost is within the instance limit."""
    chosen = _check_ids(inst, subset)
    return sum((inst.cost[v] for v in chosen), 0) <= inst.limit


def solution_for(inst: QkpInstance, subset: Iterable[int]) -> Solution:
    cost, profit = evaluate(inst, subset)
    return Solution(tuple(sorted(set(subset))), cost, profit)


def validate(inst: QkpInstance) -> list[str]:
    """All invariant violations of the instance; empty list means ok."""
    problems = []
    if inst.n < 0:
        problems.append(f"negative vertex count {inst.n}")
    if len(inst.cost) != inst.n:
        problems.append(f"expected {inst.n} costs, got {len(inst.cost)}")
    if len(inst.vprofit) != inst.n:
        problems.append(f"expected {inst.n} vertex profits, got {len(inst.vprofit)}")
    for i, c in enumerate(inst.cost):
        if c < 0:
            problems.append(f"negative cost at vertex {i}")
    for i, p in enumerate(inst.vprofit):
        if p < 0:
            problems.append(f"negative vertex profit at vertex {i}")
    if inst.limit < 0:
        problems.append("negative cost limit")
    seen = set()
    for u, v, p in inst.edges:
        if u == v:
            problems.append(f"self-loop at vertex {u}")
            continue
        if not (0 <= u < inst.n and 0 <= v < inst.n):
            problems.append(f"edge ({u},{v}) has an out-of-range endpoint")
            continue
        if (u, v) in seen:
            problems.append(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        if p < 0:
            problems.append(f"negative profit on edge ({u},{v})")
    return problems


def instance_to_json_obj(inst: QkpInstance) -> dict:
    return {
        "n": inst.n,
        "limit": rational_to_json(inst.limit),
        "costs": [rational_to_json(c) for c in inst.cost],
        "vertex_profits": [rational_to_json(p) for p in inst.vprofit],
        "edges": [[u, v, rational_to_json(p)] for u, v, p in inst.edges],
    }


def instance_from_json_obj(obj: dict) -> QkpInstance:
    try:
        return QkpInstance(
            n=int(obj["n"]),
            cost=tuple(rational_from_json(c) for c in obj["costs"]),
            vprofit=tuple(rational_from_json(p) for p in obj["vertex_profits"]),
            edges=tuple(
                (int(e[0]), int(e[1]), rational_from_json(e[2])) for e in obj["edges"]
            ),
            limit=rational_from_json(obj["limit"]),
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValueError(f"malformed instance document: {exc}") from exc


def dumps_canonical(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, one trailing \\n."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_instance(path: str) -> QkpInstance:
    """Read an instance JSON file; decimal literals parse exactly."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh, parse_float=Fraction)
    return instance_from_json_obj(obj)


def save_instance(inst: QkpInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(instance_to_json_obj(inst)))
