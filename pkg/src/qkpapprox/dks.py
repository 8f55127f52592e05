"""Densest-k-subgraph backends: the pluggable black box of the pipeline.

A backend maps (unweighted graph, k) to a set of exactly min(k, n)
vertices.  The exact backend enumerates or branch-and-bounds within a
size budget and raises CapacityError beyond it; the greedy backend peels
minimum-degree vertices and never fails.
"""

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .errors import CapacityError
from .rational import Rational, as_rational

DEFAULT_EXACT_MAX_N = 25
DEFAULT_ENUM_BUDGET = 60_000
DEFAULT_NODE_BUDGET = 50_000


@dataclass(frozen=True)
class UGraph:
    """Undirected unweighted graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced_edge_count(self, subset) -> int:
        chosen = set(subset)
        return sum(1 for u, v in self.edges if u in chosen and v in chosen)


@dataclass(frozen=True)
class DksBackend:
    """A DkS solver plus the approximation-ratio exponent it claims."""

    name: str
    declared_alpha: Rational
    solver: Callable[[UGraph, int], tuple[int, ...]] = field(compare=False)

    def __post_init__(self):
        alpha = as_rational(self.declared_alpha)
        if not 0 <= alpha < 1:
            raise ValueError(f"declared_alpha must be in [0, 1), got {alpha}")
        object.__setattr__(self, "declared_alpha", alpha)


def solve_dks(graph: UGraph, k: int, backend: DksBackend) -> tuple[int, ...]:
    """Exactly min(k, n) vertices chosen by the backend; deterministic."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    k_eff = min(k, graph.n)
    if k_eff == 0:
        return ()
    if k_eff == graph.n:
        return tuple(range(graph.n))
    chosen = tuple(sorted(backend.solver(graph, k_eff)))
    if len(chosen) != k_eff:
        raise RuntimeError(
            f"backend {backend.name} returned {len(chosen)} vertices, wanted {k_eff}"
        )
    return chosen


def _bb_exact(graph: UGraph, k: int, node_budget: int) -> tuple[int, ...]:
    """Branch and bound over a degree-descending vertex order."""
    n = graph.n
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    masks = [0] * n
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    best_edges = -1
    best_set: tuple[int, ...] = ()
    nodes = 0

    def dfs(idx, chosen_mask, count, edges, stack):
        nonlocal best_edges, best_set, nodes
        nodes += 1
        if nodes > node_budget:
            raise CapacityError(f"exact DkS node budget {node_budget} exceeded")
        if count == k:
            if edges > best_edges:
                best_edges = edges
                best_set = tuple(stack)
            return
        if n - idx < k - count:
            return
        t = k - count
        gains = sorted(
            ((masks[order[j]] & chosen_mask).bit_count() for j in range(idx, n)),
            reverse=True,
        )
        bound = edges + t * (t - 1) // 2 + sum(gains[:t])
        if bound <= best_edges:
            return
        v = order[idx]
        stack.append(v)
        dfs(idx + 1, chosen_mask | (1 << v), count + 1,
            edges + (masks[v] & chosen_mask).bit_count(), stack)
        stack.pop()
        dfs(idx + 1, chosen_mask, count, edges, stack)

    dfs(0, 0, 0, 0, [])
    return tuple(sorted(best_set))


def dks_exact(
    graph: UGraph,
    k: int,
    max_n: int = DEFAULT_EXACT_MAX_N,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...]:
    """Maximum-induced-edge k-subset, or CapacityError past the budget."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    k_eff = min(k, graph.n)
    if k_eff == 0:
        return ()
    if k_eff == graph.n:
        return tuple(range(graph.n))
    if math.comb(graph.n, k_eff) <= enum_budget:
        masks = [0] * graph.n
        for u, v in graph.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        best_edges = -1
        best = ()
        for combo in combinations(range(graph.n), k_eff):
            mask = 0
            edges = 0
            for v in combo:
                edges += (masks[v] & mask).bit_count()
                mask |= 1 << v
            if edges > best_edges:
                best_edges = edges
                best = combo
        return best
    if graph.n > max_n:
        raise CapacityError(
            f"exact DkS limited to n <= {max_n}, got n = {graph.n}"
        )
    return _bb_exact(graph, k_eff, node_budget)


def dks_greedy_peel(graph: UGraph, k: int) -> tuple[int, ...]:
    """Peel minimum-degree vertices (ties: smallest id) down to min(k, n)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    k_eff = min(k, graph.n)
    if k_eff == graph.n:
        return tuple(range(graph.n))
    deg = [graph.degree(v) for v in range(graph.n)]
    live = set(range(graph.n))
    heap = [(deg[v], v) for v in live]
    heapq.heapify(heap)
    while len(live) > k_eff:
        d, v = heapq.heappop(heap)
        if v not in live or d != deg[v]:
            continue
        live.remove(v)
        for u in graph.adj[v]:
            if u in live:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return tuple(sorted(live))


EXACT_BACKEND = DksBackend("exact", 0, dks_exact)
GREEDY_BACKEND = DksBackend("greedy", Fraction(1, 2), dks_greedy_peel)

_BACKENDS = {"exact": EXACT_BACKEND, "greedy": GREEDY_BACKEND}


def get_backend(name: str) -> DksBackend:
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown DkS backend {name!r}; choose from {sorted(_BACKENDS)}"
        ) from None
