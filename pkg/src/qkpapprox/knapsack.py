"""0/1 knapsack: profit-scaling FPTAS and an exact solver for tests.

Both run the same dominance sweep: states are (cost, profit) pairs kept on
a Pareto frontier, with parent links for subset recovery.  The FPTAS first
rounds profits to integers via the standard p_hat = floor(p * n / (eps *
p_max)) transformation.  Ties always prefer excluding the newest item, so
outputs are deterministic and lean toward low item indices.
"""

from fractions import Fraction

from .errors import CapacityError
from .rational import as_rational

DEFAULT_MAX_ITEMS = 25
_INT_CAPACITY_GUARD = 1_000_000


class _State:
    __slots__ = ("cost", "profit", "parent", "item")

    def __init__(self, cost, profit, parent, item):
        self.cost = cost
        self.profit = profit
        self.parent = parent
        self.item = item


def _check_items(items, capacity):
    norm = []
    for cost, profit in items:
        cost = as_rational(cost)
        profit = as_rational(profit)
        if cost < 0 or profit < 0:
            raise ValueError("item costs and profits must be nonnegative")
        norm.append((cost, profit))
    capacity = as_rational(capacity)
    if capacity < 0:
        raise ValueError("capacity must be nonnegative")
    return norm, capacity


def _sweep(indexed_items, capacity):
    """Pareto sweep over (cost, profit) states; returns the final frontier.

    The frontier is sorted by strictly increasing cost and profit.  States
    of equal value keep the variant that excludes the newer item.
    """
    frontier = [_State(0, 0, None, None)]
    for idx, cost, profit in indexed_items:
        added = []
        for st in frontier:
            c = st.cost + cost
            if c <= capacity:
                added.append(_State(c, st.profit + profit, st, idx))
        merged = []
        best = -1
        i = j = 0
        while i < len(frontier) or j < len(added):
            if j >= len(added):
                st = frontier[i]
                i += 1
            elif i >= len(frontier):
                st = added[j]
                j += 1
            elif frontier[i].cost < added[j].cost or (
                frontier[i].cost == added[j].cost
                and frontier[i].profit >= added[j].profit
            ):
                st = frontier[i]
                i += 1
            else:
                st = added[j]
                j += 1
            if st.profit > best:
                merged.append(st)
                best = st.profit
        frontier = merged
    return frontier


def _recover(state) -> tuple[int, ...]:
    chosen = []
    while state is not None:
        if state.item is not None:
            chosen.append(state.item)
        state = state.parent
    return tuple(sorted(chosen))


def knapsack_fptas(items, capacity, eps) -> tuple[int, ...]:
    """(1 - eps)-approximate 0/1 knapsack; returns chosen item indices.

    items: sequence of (cost, profit) with nonnegative exact rationals.
    eps must lie strictly in (0, 1).
    """
    eps = as_rational(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    norm, capacity = _check_items(items, capacity)
    usable = [
        (i, c, p) for i, (c, p) in enumerate(norm) if c <= capacity and p > 0
    ]
    if not usable:
        return ()
    p_max = max(p for _, _, p in usable)
    scale = Fraction(len(usable)) / (Fraction(eps) * Fraction(p_max))
    # the p_max item always scales to >= 1, so the sweep is never empty
    scaled = []
    for i, c, p in usable:
        p_hat = int(p * scale)
        if p_hat > 0:
            scaled.append((i, c, p_hat))
    frontier = _sweep(scaled, capacity)
    return _recover(frontier[-1])


def knapsack_exact(items, capacity, max_items: int = DEFAULT_MAX_ITEMS) -> tuple[int, ...]:
    """Exact 0/1 knapsack by dominance sweep; returns chosen item indices.

    Guarded: beyond max_items items the sweep is only attempted when all
    costs are integral and the capacity is small enough to bound the
    frontier; otherwise CapacityError.
    """
    norm, capacity = _check_items(items, capacity)
    usable = [
        (i, c, p) for i, (c, p) in enumerate(norm) if c <= capacity and p > 0
    ]
    if len(usable) > max_items:
        integral = all(isinstance(c, int) for _, c, _ in usable)
        if not (integral and capacity <= _INT_CAPACITY_GUARD):
            raise CapacityError(
                f"exact knapsack limited to {max_items} items "
                "(or integral costs with bounded capacity)"
            )
    frontier = _sweep(usable, capacity)
    return _recover(frontier[-1])
