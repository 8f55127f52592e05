"""Split a prepared instance into the five structured sub-instance classes.

Every rounded edge is keyed by (bucket of u, bucket of v, profit level)
and lands in exactly one sub-instance; all vertex profits go to the single
class-1 sub-instance.  Classes:

  1: vertex profits only (plain knapsack)
  2: both endpoints in the tail bucket
  3: both endpoints in one non-tail bucket
  4: tail x non-tail (bipartite)
  5: two distinct non-tail buckets (bipartite)

Costs of classes 3-5 are rescaled so the light side lies in (1, 2] (class
4: the tail side lies in (0, 1]); the heavy side of 4/5 lies in (d, 2d]
for a power of two d.  The cost limit is divided by the same scale.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .instance import QkpInstance
from .preprocess import PreparedInstance
from .rational import Rational, pow2, rational_to_json


@dataclass(frozen=True)
class SubInstance:
    """One class-tagged restricted problem over reduced vertex ids.

    vertices lists all members; part_a/part_b are set for the bipartite
    classes 4 and 5 (part_a is the lighter side).  scaled_cost maps each
    member to cost/cost_scale and scaled_limit is limit/cost_scale.
    buckets: (i, i) for classes 2/3, (tail, i) for class 4, and (i, j)
    with i < j for class 5 (part_a lives in bucket j, part_b in i).
    """

    class_tag: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    scaled_cost: dict[int, Rational]
    cost_scale: Rational
    scaled_limit: Rational
    part_a: Optional[tuple[int, ...]] = None
    part_b: Optional[tuple[int, ...]] = None
    profit_level: Optional[Rational] = None
    vertex_profit: Optional[dict[int, Rational]] = None
    buckets: Optional[tuple[int, int]] = None
    d_gap: Optional[Rational] = None

    def edge_count(self) -> int:
        return len(self.edges)

    def profit_mass(self) -> Rational:
        """Total profit carried by this sub-instance."""
        if self.class_tag == 1:
            return sum(self.vertex_profit.values()) if self.vertex_profit else 0
        return self.profit_level * len(self.edges)

    def to_json_obj(self) -> dict:
        return {
            "class": self.class_tag,
            "vertices": list(self.vertices),
            "part_a": list(self.part_a) if self.part_a is not None else None,
            "part_b": list(self.part_b) if self.part_b is not None else None,
            "edge_count": len(self.edges),
            "profit_level": (
                rational_to_json(self.profit_level)
                if self.profit_level is not None
                else None
            ),
            "cost_scale": rational_to_json(self.cost_scale),
            "scaled_limit": rational_to_json(self.scaled_limit),
            "buckets": list(self.buckets) if self.buckets is not None else None,
            "d_gap": rational_to_json(self.d_gap) if self.d_gap is not None else None,
        }


def _scaled(inst: QkpInstance, members, scale: Rational) -> dict[int, Rational]:
    if scale == 1:
        return {v: inst.cost[v] for v in members}
    return {v: Fraction(inst.cost[v]) / Fraction(scale) for v in members}


def decompose(prep: PreparedInstance) -> list[SubInstance]:
    """All sub-instances of the prepared instance, class 1 first.

    Only occupied (bucket pair, level) cells produce a sub-instance, so
    the count stays within 2*(log2 n + 1)^3 + 1.
    """
    inst = prep.reduced
    l = prep.l_buckets
    k = prep.k_exp
    tail = l + 1

    subs = [
        SubInstance(
            class_tag=1,
            vertices=tuple(range(inst.n)),
            edges=(),
            scaled_cost={v: inst.cost[v] for v in range(inst.n)},
            cost_scale=1,
            scaled_limit=inst.limit,
            vertex_profit={v: inst.vprofit[v] for v in range(inst.n)},
        )
    ]

    cells: dict[tuple[int, int, Rational], list[tuple[int, int]]] = {}
    for u, v, p in inst.edges:
        bu, bv = prep.bucket_of[u], prep.bucket_of[v]
        key = (min(bu, bv), max(bu, bv), p)
        cells.setdefault(key, []).append((u, v))

    for (b_lo, b_hi, level) in sorted(cells, key=lambda c: (c[0], c[1], c[2])):
        edges = tuple(sorted(cells[(b_lo, b_hi, level)]))
        members = tuple(sorted({w for e in edges for w in e}))
        if b_lo == tail:  # both tail
            subs.append(
                SubInstance(
                    class_tag=2,
                    vertices=members,
                    edges=edges,
                    scaled_cost=_scaled(inst, members, 1),
                    cost_scale=1,
                    scaled_limit=inst.limit,
                    profit_level=level,
                    buckets=(tail, tail),
                )
            )
        elif b_hi <= l and b_lo == b_hi:  # same non-tail bucket
            scale = pow2(k - b_lo)
            subs.append(
                SubInstance(
                    class_tag=3,
                    vertices=members,
                    edges=edges,
                    scaled_cost=_scaled(inst, members, scale),
                    cost_scale=scale,
                    scaled_limit=Fraction(inst.limit) / Fraction(scale),
                    profit_level=level,
                    buckets=(b_lo, b_hi),
                )
            )
        elif b_hi == tail:  # tail x non-tail: class 4
            heavy = b_lo
            part_a = tuple(v for v in members if prep.bucket_of[v] == tail)
            part_b = tuple(v for v in members if prep.bucket_of[v] == heavy)
            scale = pow2(k - l)
            subs.append(
                SubInstance(
                    class_tag=4,
                    vertices=members,
                    edges=edges,
                    scaled_cost=_scaled(inst, members, scale),
                    cost_scale=scale,
                    scaled_limit=Fraction(inst.limit) / Fraction(scale),
                    part_a=part_a,
                    part_b=part_b,
                    profit_level=level,
                    buckets=(tail, heavy),
                    d_gap=pow2(l - heavy),
                )
            )
        else:  # two distinct non-tail buckets: class 5
            i, j = b_lo, b_hi  # bucket i holds the heavier costs
            part_a = tuple(v for v in members if prep.bucket_of[v] == j)
            part_b = tuple(v for v in members if prep.bucket_of[v] == i)
            scale = pow2(k - j)
            subs.append(
                SubInstance(
                    class_tag=5,
                    vertices=members,
                    edges=edges,
                    scaled_cost=_scaled(inst, members, scale),
                    cost_scale=scale,
                    scaled_limit=Fraction(inst.limit) / Fraction(scale),
                    part_a=part_a,
                    part_b=part_b,
                    profit_level=level,
                    buckets=(i, j),
                    d_gap=pow2(j - i),
                )
            )
    return subs


def subinstance_count_bound(n: int) -> float:
    """The 2*(log2 n + 1)^3 + 1 ceiling on the number of sub-instances."""
    import math

    if n < 1:
        return 1.0
    return 2 * (math.log2(n) + 1) ** 3 + 1


def subinstance_as_qkp(sub: SubInstance, unit_edge_profit: bool = False) -> tuple[QkpInstance, tuple[int, ...]]:
    """Materialize a sub-instance as a standalone QKP at its scaled limit.

    Returns the instance over densely relabeled vertices and the tuple
    mapping local ids back to the sub-instance's reduced ids.  With
    unit_edge_profit the edges carry profit 1 (edge counting).
    """
    members = sub.vertices
    local = {v: i for i, v in enumerate(members)}
    profit = 1 if unit_edge_profit else (sub.profit_level or 1)
    vp = tuple(
        (sub.vertex_profit or {}).get(v, 0) for v in members
    )
    inst = QkpInstance(
        n=len(members),
        cost=tuple(sub.scaled_cost[v] for v in members),
        vprofit=vp,
        edges=tuple(
            (local[u], local[v], profit) for u, v in sub.edges
        ),
        limit=sub.scaled_limit,
    )
    return inst, members
