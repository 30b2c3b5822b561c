import pytest

from youngcover.constructor import build_staircase_partition, capacity, feasible
from youngcover.diagram import Cover, is_cover, locality, make_diagram, staircase
from youngcover.errors import CapExceeded, InvalidBudget
from youngcover.oracle import (
    SearchCaps,
    Verdict,
    check_witness,
    exists_local_cover,
    min_balanced_budget_oracle,
    staircase_search,
)

from .helpers import FIG1, naive_local_cover


@pytest.mark.parametrize(
    "z, i, j, verdict",
    [(2, 1, 1, Verdict.INFEASIBLE), (5, 2, 2, Verdict.FEASIBLE), (6, 2, 2, Verdict.INFEASIBLE)]
    + [(j + 1, 1, j, Verdict.INFEASIBLE) for j in range(1, 6)],
)
def test_exists_local_cover_examples(z, i, j, verdict):
    report = exists_local_cover(staircase(z), i, j)
    assert report.verdict is verdict
    if verdict is Verdict.FEASIBLE:
        assert check_witness(staircase(z), report.witness, i, j)
    else:
        assert report.witness is None


def test_witness_on_general_diagram():
    report = exists_local_cover(FIG1, 2, 2)
    assert report.feasible and check_witness(FIG1, report.witness, 2, 2)
    assert exists_local_cover(FIG1, 1, 4).verdict is Verdict.INFEASIBLE


def test_agrees_with_unrestricted_search():
    # the naive search has no normal-form assumptions at all
    for z in range(1, 5):
        for i in range(1, 4):
            for j in range(1, 4):
                naive = naive_local_cover(staircase(z), i, j)
                assert (naive is not None) == exists_local_cover(staircase(z), i, j).feasible


@pytest.mark.parametrize("i, j", [(i, j) for i in range(1, 5) for j in range(1, 5) if i + j <= 5])
def test_completeness_against_threshold(i, j):
    caps = SearchCaps(max_z=capacity(i, j) + 1)
    for z in range(1, min(6, capacity(i, j) + 1) + 1):
        report = exists_local_cover(staircase(z), i, j, caps)
        assert report.feasible == feasible(i, j, z)


def test_monotone_in_budget():
    for z in range(1, 7):
        for i in range(1, 4):
            for j in range(1, 4):
                if exists_local_cover(staircase(z), i, j).feasible:
                    assert exists_local_cover(staircase(z), i + 1, j).feasible
                    assert exists_local_cover(staircase(z), i, j + 1).feasible


def test_deterministic():
    a = exists_local_cover(staircase(5), 2, 2)
    b = exists_local_cover(staircase(5), 2, 2)
    assert a == b
    c = exists_local_cover(staircase(6), 2, 2)
    d = exists_local_cover(staircase(6), 2, 2)
    assert c.nodes_explored == d.nodes_explored


def test_caps_give_unknown_never_infeasible():
    report = exists_local_cover(staircase(6), 2, 2, SearchCaps(max_nodes=3))
    assert report.verdict is Verdict.UNKNOWN and report.witness is None
    report = exists_local_cover(staircase(9), 2, 3)
    assert report.verdict is Verdict.UNKNOWN  # default max_z is 8
    with pytest.raises(CapExceeded):
        min_balanced_budget_oracle(staircase(6), SearchCaps(max_nodes=3))


def test_invalid_budget():
    with pytest.raises(InvalidBudget):
        exists_local_cover(staircase(2), 0, 1)


def test_transposed_search_witness():
    W, _ = staircase_search(9, 3, 2, 10**6)
    assert is_cover(staircase(9), W) and locality(staircase(9), W).is_local(3, 2)


@pytest.mark.parametrize("z, k", [(1, 1), (5, 2), (6, 3), (2, 2)])
def test_min_balanced_budget_oracle(z, k):
    assert min_balanced_budget_oracle(staircase(z)) == k


def test_check_witness():
    C = build_staircase_partition(3, 2)
    Y = staircase(9)
    assert check_witness(Y, C, 3, 2)
    assert not check_witness(Y, C, 2, 2)
    assert not check_witness(Y, Cover(), 1, 1)
    for i in range(2, 5):
        for j in range(1, 5):
            C = build_staircase_partition(i, j)
            assert not check_witness(staircase(capacity(i, j)), C, i - 1, j)
    assert not check_witness(make_diagram([1]), C, 9, 9)
