"""Knapsack FPTAS and exact solver."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from qkpapprox.errors import CapacityError
from qkpapprox.knapsack import knapsack_exact, knapsack_fptas


def total(items, chosen):
    cost = sum(items[i][0] for i in chosen)
    profit = sum(items[i][1] for i in chosen)
    return cost, profit


def brute_opt(items, capacity):
    best = 0
    for r in range(len(items) + 1):
        for combo in combinations(range(len(items)), r):
            cost, profit = total(items, combo)
            if cost <= capacity and profit > best:
                best = profit
    return best


def test_fptas_symmetric_tie():
    items = [(1, 10), (1, 10)]
    chosen = knapsack_fptas(items, 1, Fraction(1, 2))
    assert total(items, chosen) == (1, 10)
    assert chosen == (0,)  # tie leans toward the lower index


def test_fptas_small_exhaustive_case():
    items = [(2, 3), (3, 4), (4, 5)]
    chosen = knapsack_fptas(items, 5, Fraction(1, 10))
    cost, profit = total(items, chosen)
    assert cost <= 5
    assert profit == 7  # brute force over all 8 subsets


def test_fptas_zero_capacity():
    assert knapsack_fptas([(2, 3), (1, 1)], 0, Fraction(1, 4)) == ()


def test_fptas_eps_validation():
    with pytest.raises(ValueError):
        knapsack_fptas([(1, 1)], 1, 0)
    with pytest.raises(ValueError):
        knapsack_fptas([(1, 1)], 1, 1)


def test_fptas_rejects_negative_values():
    with pytest.raises(ValueError):
        knapsack_fptas([(-1, 1)], 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        knapsack_fptas([(1, 1)], -1, Fraction(1, 2))


def test_exact_small_case():
    items = [(2, 3), (3, 4), (4, 5)]
    chosen = knapsack_exact(items, 5)
    assert total(items, chosen) == (5, 7)


def test_exact_single_heavy_item():
    assert knapsack_exact([(10, 5)], 4) == ()


def test_exact_all_zero_cost():
    items = [(0, 3), (0, 1), (0, 2)]
    assert knapsack_exact(items, 0) == (0, 1, 2)


def test_exact_guard_trips():
    items = [(Fraction(1, 3), 1)] * 30
    with pytest.raises(CapacityError):
        knapsack_exact(items, 5)


def test_exact_many_integral_items_allowed():
    rng = random.Random(0)
    items = [(rng.randint(1, 9), rng.randint(0, 9)) for _ in range(60)]
    chosen = knapsack_exact(items, 40)
    cost, profit = total(items, chosen)
    assert cost <= 40
    greedy_lb = max(p for c, p in items if c <= 40)
    assert profit >= greedy_lb


def test_fptas_respects_ratio_on_random_integral_instances():
    rng = random.Random(42)
    for trial in range(200):
        n = rng.randint(1, 100)
        items = [(rng.randint(1, 30), rng.randint(0, 50)) for _ in range(n)]
        capacity = rng.randint(0, 15 * n)
        exact = knapsack_exact(items, capacity)
        opt = total(items, exact)[1]
        for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)):
            chosen = knapsack_fptas(items, capacity, eps)
            cost, profit = total(items, chosen)
            assert cost <= capacity
            assert profit >= (1 - eps) * opt


def test_fptas_exact_rational_inputs():
    items = [(Fraction(1, 2), Fraction(3, 7)), (Fraction(1, 3), Fraction(2, 7))]
    chosen = knapsack_fptas(items, Fraction(5, 6), Fraction(1, 4))
    cost, profit = total(items, chosen)
    assert cost <= Fraction(5, 6)
    assert profit == Fraction(5, 7)


def test_fptas_deterministic():
    rng = random.Random(3)
    items = [(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(20)]
    a = knapsack_fptas(items, 30, Fraction(1, 4))
    b = knapsack_fptas(items, 30, Fraction(1, 4))
    assert a == b


def test_exact_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(0, 10)
        items = [(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(n)]
        capacity = rng.randint(0, 30)
        chosen = knapsack_exact(items, capacity)
        cost, profit = total(items, chosen)
        assert cost <= capacity
        assert profit == brute_opt(items, capacity)
