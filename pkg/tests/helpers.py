"""Shared test utilities: independent oracles and instance generators.

The brute-force solvers here deliberately avoid the library's adjacency
and search machinery so they can serve as independent cross-checks.
"""

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from qkpapprox.decompose import SubInstance
from qkpapprox.instance import QkpInstance


def brute_force_opt(inst: QkpInstance):
    """Optimal (profit, vertex set) by full 2^n enumeration.

    Profit is recomputed from the raw edge list, independent of
    evaluate()'s adjacency walk.
    """
    best_profit = 0
    best_set: tuple[int, ...] = ()
    for r in range(inst.n + 1):
        for combo in combinations(range(inst.n), r):
            if sum(inst.cost[v] for v in combo) > inst.limit:
                continue
            chosen = set(combo)
            profit = sum(inst.vprofit[v] for v in combo)
            for u, v, p in inst.edges:
                if u in chosen and v in chosen:
                    profit += p
            if profit > best_profit:
                best_profit = profit
                best_set = combo
    return best_profit, best_set


def brute_force_dks(n: int, edges, k: int):
    """Max induced edge count over all k-subsets, by raw enumeration."""
    k = min(k, n)
    best = 0
    edge_list = [(min(u, v), max(u, v)) for u, v in edges]
    for combo in combinations(range(n), k):
        chosen = set(combo)
        count = sum(1 for u, v in edge_list if u in chosen and v in chosen)
        best = max(best, count)
    return best


@st.composite
def qkp_instances(
    draw,
    min_n=0,
    max_n=8,
    max_cost=10,
    max_profit=10,
    allow_zero_cost=True,
    allow_vertex_profit=True,
):
    n = draw(st.integers(min_n, max_n))
    lo = 0 if allow_zero_cost else 1
    costs = tuple(draw(st.integers(lo, max_cost)) for _ in range(n))
    if allow_vertex_profit:
        vprofits = tuple(draw(st.integers(0, max_profit)) for _ in range(n))
    else:
        vprofits = (0,) * n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v, draw(st.integers(0, max_profit))))
    limit = draw(st.integers(0, max(1, sum(costs))))
    return QkpInstance(
        n=n, cost=costs, vprofit=vprofits, edges=tuple(edges), limit=limit
    )


def random_class3_sub(rng: random.Random) -> SubInstance:
    """Conforming class-3 sub-instance: scaled costs in (1,2]."""
    r = rng.randint(4, 12)
    verts = tuple(range(r))
    costs = {v: 1 + Fraction(rng.randint(1, 8), 8) for v in verts}
    density = rng.choice([0.3, 0.6, 0.9])
    edges = tuple(
        (u, v) for u in range(r) for v in range(u + 1, r) if rng.random() < density
    )
    limit = Fraction(rng.randint(16, 40), 4)
    return SubInstance(
        class_tag=3,
        vertices=verts,
        edges=edges,
        scaled_cost=costs,
        cost_scale=1,
        scaled_limit=limit,
        profit_level=1,
        buckets=(1, 1),
    )


def random_class4_sub(rng: random.Random) -> SubInstance:
    """Conforming class-4 sub-instance: light side <= min(1, limit/n),
    heavy side in (d, 2d], limit >= 4d, at least 4 light vertices."""
    n_a = rng.randint(4, 9)
    n_b = rng.randint(1, 12 - n_a)
    n = n_a + n_b
    d = rng.choice([1, 2, 4])
    limit = 4 * d + Fraction(rng.randint(0, 16 * d), 2)
    part_a = tuple(range(n_a))
    part_b = tuple(range(n_a, n))
    a_max = min(Fraction(1), limit / n)
    costs = {}
    for v in part_a:
        costs[v] = a_max * Fraction(rng.randint(1, 16), 16)
    for v in part_b:
        costs[v] = d + d * Fraction(rng.randint(1, 16), 16)
    density = rng.choice([0.3, 0.6, 0.9])
    edges = tuple(
        (a, b) for a in part_a for b in part_b if rng.random() < density
    )
    return SubInstance(
        class_tag=4,
        vertices=tuple(range(n)),
        edges=edges,
        scaled_cost=costs,
        cost_scale=1,
        scaled_limit=limit,
        part_a=part_a,
        part_b=part_b,
        profit_level=1,
        buckets=(2, 1),
        d_gap=d,
    )


def random_class5_case2_sub(rng: random.Random) -> SubInstance:
    """Conforming class-5 sub-instance forced into case 2 under alpha=0.

    Light side in (1,2] with more vertices than the scaled limit, heavy
    side in (d,2d] with d=2, limit >= 4d.
    """
    d = 2
    n_a = rng.randint(9, 11)
    n_b = rng.randint(1, 12 - n_a)
    limit = 8 + Fraction(rng.randint(0, max(0, 2 * (n_a - 9))), 2)
    if limit >= n_a:
        limit = Fraction(2 * n_a - 3, 2)
    part_a = tuple(range(n_a))
    part_b = tuple(range(n_a, n_a + n_b))
    costs = {}
    for v in part_a:
        costs[v] = 1 + Fraction(rng.randint(1, 16), 16)
    for v in part_b:
        costs[v] = d + d * Fraction(rng.randint(1, 16), 16)
    density = rng.choice([0.3, 0.6, 0.9])
    edges = tuple(
        (a, b) for a in part_a for b in part_b if rng.random() < density
    )
    return SubInstance(
        class_tag=5,
        vertices=tuple(range(n_a + n_b)),
        edges=edges,
        scaled_cost=costs,
        cost_scale=1,
        scaled_limit=limit,
        part_a=part_a,
        part_b=part_b,
        profit_level=1,
        buckets=(2, 1),
        d_gap=d,
    )


def random_bipartite_sub(rng: random.Random, d: int) -> SubInstance:
    """Small bipartite class-5-shaped sub-instance for replication tests."""
    n_a = rng.randint(1, 5)
    n_b = rng.randint(1, 3)
    part_a = tuple(range(n_a))
    part_b = tuple(range(n_a, n_a + n_b))
    costs = {}
    for v in part_a:
        costs[v] = 1 + Fraction(rng.randint(1, 16), 16)
    for v in part_b:
        costs[v] = d + d * Fraction(rng.randint(1, 16), 16)
    edges = tuple(
        (a, b) for a in part_a for b in part_b if rng.random() < 0.7
    )
    limit = Fraction(rng.randint(8, 40), 2)
    return SubInstance(
        class_tag=5,
        vertices=tuple(range(n_a + n_b)),
        edges=edges,
        scaled_cost=costs,
        cost_scale=1,
        scaled_limit=limit,
        part_a=part_a,
        part_b=part_b,
        profit_level=1,
        buckets=(2, 1),
        d_gap=d,
    )


def sub_edge_count(sub: SubInstance, chosen) -> int:
    chosen = set(chosen)
    return sum(1 for u, v in sub.edges if u in chosen and v in chosen)


def sub_cost(sub: SubInstance, chosen) -> Fraction:
    return sum((Fraction(sub.scaled_cost[v]) for v in chosen), Fraction(0))
