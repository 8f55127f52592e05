"""Core data model: evaluation, feasibility, validation, JSON round trip."""

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_force_opt, qkp_instances
from qkpapprox.instance import (
    QkpInstance,
    evaluate,
    instance_from_json_obj,
    instance_to_json_obj,
    is_feasible,
    load_instance,
    save_instance,
    validate,
)


def triangle(limit=2):
    return QkpInstance(
        n=3,
        cost=(1, 1, 1),
        vprofit=(0, 0, 0),
        edges=((0, 1, 1), (1, 2, 1), (0, 2, 1)),
        limit=limit,
    )


def test_evaluate_full_triangle():
    cost, profit = evaluate(triangle(), {0, 1, 2})
    assert (cost, profit) == (3, 3)


def test_evaluate_empty_set():
    assert evaluate(triangle(), set()) == (0, 0)


def test_evaluate_path_with_vertex_profit():
    inst = QkpInstance(
        n=3,
        cost=(1, 1, 1),
        vprofit=(2, 0, 0),
        edges=((0, 1, 1), (1, 2, 1)),
        limit=10,
    )
    cost, profit = evaluate(inst, {0, 1})
    assert (cost, profit) == (2, 3)


def test_evaluate_rejects_bad_vertex():
    with pytest.raises(ValueError):
        evaluate(triangle(), {0, 7})


def test_feasible_boundary_equality():
    inst = QkpInstance(n=2, cost=(1, 1), vprofit=(0, 0), edges=(), limit=2)
    assert is_feasible(inst, {0, 1})


def test_infeasible_over_limit():
    inst = QkpInstance(n=2, cost=(3, 3), vprofit=(0, 0), edges=(), limit=5)
    assert not is_feasible(inst, {0, 1})


def test_empty_set_feasible_at_zero_limit():
    inst = QkpInstance(n=1, cost=(1,), vprofit=(0,), edges=(), limit=0)
    assert is_feasible(inst, set())


def test_validate_ok():
    assert validate(triangle()) == []


def test_validate_self_loop():
    inst = QkpInstance(n=3, cost=(1, 1, 1), vprofit=(0, 0, 0), edges=((2, 2, 5),), limit=2)
    assert any("self-loop" in v for v in validate(inst))


def test_validate_negative_cost():
    inst = QkpInstance(n=2, cost=(1, -1), vprofit=(0, 0), edges=(), limit=2)
    assert any("negative cost" in v for v in validate(inst))


def test_validate_duplicate_edge_and_bad_id():
    inst = QkpInstance(
        n=2, cost=(1, 1), vprofit=(0, 0), edges=((0, 1, 1), (1, 0, 2), (0, 5, 1)), limit=2
    )
    found = validate(inst)
    assert any("duplicate" in v for v in found)
    assert any("out-of-range" in v for v in found)


def test_edges_canonicalized_to_sorted_order():
    inst = QkpInstance(n=3, cost=(1, 1, 1), vprofit=(0, 0, 0), edges=((2, 0, 5),), limit=2)
    assert inst.edges == ((0, 2, 5),)


def test_rationals_normalized():
    inst = QkpInstance(
        n=1, cost=(Fraction(4, 2),), vprofit=("1/3",), edges=(), limit="7"
    )
    assert inst.cost == (2,)
    assert inst.vprofit == (Fraction(1, 3),)
    assert inst.limit == 7


def test_floats_rejected():
    with pytest.raises(TypeError):
        QkpInstance(n=1, cost=(0.5,), vprofit=(0,), edges=(), limit=1)


@given(qkp_instances(max_n=8))
def test_profit_matches_brute_force_pair_sum(inst):
    # cross-check evaluate against a raw scan over all vertex pairs
    import itertools

    for r in (0, inst.n // 2, inst.n):
        for combo in itertools.islice(itertools.combinations(range(inst.n), r), 8):
            chosen = set(combo)
            expected = sum(inst.vprofit[v] for v in chosen)
            for u, v, p in inst.edges:
                if u in chosen and v in chosen:
                    expected += p
            assert evaluate(inst, chosen)[1] == expected


@given(qkp_instances(max_n=7), st.data())
def test_evaluate_monotone_in_subset(inst, data):
    subset = data.draw(
        st.sets(st.integers(0, max(0, inst.n - 1)), max_size=inst.n)
        if inst.n
        else st.just(set())
    )
    superset = set(range(inst.n))
    assert evaluate(inst, subset)[1] <= evaluate(inst, superset)[1]


@given(qkp_instances(max_n=6))
def test_empty_always_feasible(inst):
    assert is_feasible(inst, set())


def test_json_round_trip(tmp_path):
    inst = QkpInstance(
        n=3,
        cost=(1, Fraction(5, 2), 3),
        vprofit=(0, 1, Fraction(1, 3)),
        edges=((0, 1, 2), (1, 2, Fraction(7, 4))),
        limit=Fraction(9, 2),
    )
    path = tmp_path / "inst.json"
    save_instance(inst, str(path))
    again = load_instance(str(path))
    assert again == inst
    # non-integral rationals serialize as p/q strings
    obj = json.loads(path.read_text())
    assert obj["limit"] == "9/2"
    assert obj["costs"][1] == "5/2"


def test_json_decimal_literals_parse_exactly():
    obj = {
        "n": 1,
        "limit": 0.1,
        "costs": [1],
        "vertex_profits": [0],
        "edges": [],
    }
    text = json.dumps(obj)
    parsed = json.loads(text, parse_float=Fraction)
    inst = instance_from_json_obj(parsed)
    assert inst.limit == Fraction(1, 10)


def test_adjacency_degree():
    inst = triangle()
    assert [inst.degree(v) for v in range(3)] == [2, 2, 2]
    assert instance_to_json_obj(inst)["n"] == 3
