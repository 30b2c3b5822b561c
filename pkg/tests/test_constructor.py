import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngcover.constructor import (
    Budget,
    build_partition_for,
    build_staircase_partition,
    capacity,
    capacity_recursive,
    feasible,
    min_balanced_budget,
    min_balanced_budget_for_steps,
    restrict_to_suffix,
)
from youngcover.diagram import GenRect, is_partition, locality, make_diagram, rect, staircase
from youngcover.errors import Infeasible, InvalidBudget

from .helpers import random_diagram


@pytest.mark.parametrize("i, j, expected", [(1, 7, 7), (3, 2, 9), (2, 2, 5), (2, 3, 9), (1, 1, 1)])
def test_capacity_values(i, j, expected):
    assert capacity(i, j) == expected


def test_capacity_recursion_agrees_with_closed_form():
    for i in range(1, 40):
        for j in range(1, 41 - i):
            assert capacity(i, j) == capacity_recursive(i, j)


def test_capacity_is_exact_for_large_arguments():
    assert capacity(60, 60) == comb(120, 60) - 1
    with pytest.raises(InvalidBudget):
        capacity(0, 3)
    with pytest.raises(InvalidBudget):
        Budget(2, 0)


@pytest.mark.parametrize(
    "i, j, z, expected",
    [(2, 2, 5, True), (2, 2, 6, False), (1, 1, 1, True), (1, 1, 2, False), (3, 3, 19, True), (3, 3, 20, False)],
)
def test_feasible(i, j, z, expected):
    assert feasible(i, j, z) is expected


@pytest.mark.parametrize("z, k", [(1, 1), (2, 2), (5, 2), (6, 3), (19, 3), (20, 4), (69, 4), (70, 5)])
def test_min_balanced_budget(z, k):
    assert min_balanced_budget_for_steps(z) == k
    assert min_balanced_budget(staircase(z)) == k


def test_build_examples():
    C = build_staircase_partition(1, 7)
    assert list(C) == [rect([s], range(1, 9 - s)) for s in range(1, 8)]
    C = build_staircase_partition(3, 2)
    assert len(C) == 9
    assert C[0] == rect(range(1, 7), range(1, 5))
    C = build_staircase_partition(2, 2)
    assert len(C) == 5 and is_partition(staircase(5), C) and locality(staircase(5), C).is_local(2, 2)


@pytest.mark.parametrize("i, j", [(i, j) for i in range(1, 6) for j in range(1, 6)])
def test_build_is_optimal_partition(i, j):
    z = capacity(i, j)
    Y = staircase(z)
    C = build_staircase_partition(i, j)
    assert len(C) == z
    assert is_partition(Y, C)
    assert C.all_actual
    assert locality(Y, C).is_local(i, j)


@pytest.mark.parametrize("i, j", [(i, j) for i in range(1, 5) for j in range(1, 5)])
def test_transpose_gives_swapped_budget(i, j):
    z = capacity(i, j)
    Ct = build_staircase_partition(i, j).transpose()
    assert is_partition(staircase(z), Ct)
    assert locality(staircase(z), Ct).is_local(j, i)


def test_restrict_to_suffix():
    C = build_staircase_partition(2, 2)
    assert restrict_to_suffix(C, 5) == C
    R3 = restrict_to_suffix(C, 3)
    assert is_partition(staircase(3), R3) and R3.all_actual
    assert locality(staircase(3), R3).is_local(2, 2)
    assert list(restrict_to_suffix(C, 1)) == [GenRect((1,), (1,))]


@pytest.mark.parametrize("i, j", [(2, 3), (3, 3), (4, 2)])
def test_restrict_every_size(i, j):
    C = build_staircase_partition(i, j)
    for zz in range(1, capacity(i, j) + 1):
        R = restrict_to_suffix(C, zz)
        assert is_partition(staircase(zz), R) and R.all_actual
        assert locality(staircase(zz), R).is_local(i, j)


def test_build_partition_for_examples():
    C = build_partition_for(staircase(9), 2, 3)
    assert is_partition(staircase(9), C) and C.all_actual and locality(staircase(9), C).is_local(2, 3)
    Y = make_diagram([2, 2])
    for i, j in [(1, 1), (3, 5)]:
        assert list(build_partition_for(Y, i, j)) == [rect([1, 2], [1, 2])]
    with pytest.raises(Infeasible):
        build_partition_for(staircase(6), 2, 2)


def test_build_partition_for_huge_budget_stays_small():
    C = build_partition_for(staircase(4), 40, 40)
    assert is_partition(staircase(4), C)


@given(st.randoms(use_true_random=False), st.integers(1, 4), st.integers(1, 4))
def test_build_partition_for_random(rng, i, j):
    Y = random_diagram(rng, max_rows=12, max_cols=12, max_steps=12)
    if not feasible(i, j, Y.z):
        with pytest.raises(Infeasible):
            build_partition_for(Y, i, j)
        return
    C = build_partition_for(Y, i, j)
    assert is_partition(Y, C) and C.all_actual and locality(Y, C).is_local(i, j)


def test_build_partition_for_five_step_diagram():
    rng = random.Random(3)
    Y = next(Y for Y in (random_diagram(rng, 10, 10, 5) for _ in range(100)) if Y.z == 5)
    C = build_partition_for(Y, 2, 2)
    assert is_partition(Y, C) and C.all_actual and locality(Y, C).is_local(2, 2)
