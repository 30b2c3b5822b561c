"""Exhaustive decision procedure for (i,j)-local coverability.

Search space
------------
Every cover of a z-step diagram can be merged down to exactly z rectangles
without raising any row or column usage, and the problem transfers to the
staircase Y_z. In Y_z a rectangle holds at most one step, so each of the z
rectangles owns one step ``k = (k, z+1-k)`` and has the shape
``S_k x T_k`` with ``k in S_k <= [k]`` and ``z+1-k in T_k <= [z+1-k]``.

The search walks this space from the row side. For row ``a`` let
``A_a = {k : a in S_k}``; it contains ``a``, lies in ``[a, z]`` and has at
most ``i`` members. Adding a step to ``A_a`` only adds cells, so we may
take ``|A_a| = min(i, z - a + 1)``. Reading columns right to left as
``c = z + 1 - b``, the column side ``B_c = {k : b in T_k}`` contains ``c``,
lies in ``[1, c]`` and has at most ``j`` members. Cell ``(a, b)`` is covered
iff ``A_a`` and ``B_c`` meet, so once the rows are fixed each column is an
independent hitting-set question of size ``j - 1``. Rows are assigned in
increasing order and every column is re-checked against the rows fixed so
far, which prunes dead prefixes early. When ``i > j`` the problem is
transposed first so the branching side is the cheaper one.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .diagram import Cover, GenRect, YoungDiagram, is_cover, locality
from .errors import CapExceeded, InvalidBudget
from .reduction import expand


@dataclass(frozen=True)
class SearchCaps:
    max_nodes: int = 10**8
    max_z: int = 8
    # graph and poset brute-force limits
    max_vertices_cb: int = 12
    max_edges_d: int = 16
    max_poset: int = 6

    def __post_init__(self):
        for name in ("max_nodes", "max_z", "max_vertices_cb", "max_edges_d", "max_poset"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


class Verdict(str, enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FeasibilityReport:
    verdict: Verdict
    witness: Optional[Cover]
    nodes_explored: int
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE


class _NodeLimit(Exception):
    pass


def _hitting_set(sets: list[tuple[int, ...]], budget: int) -> Optional[tuple[int, ...]]:
    """Some set of at most ``budget`` elements meeting every member of ``sets``."""
    chosen: list[int] = []

    def go(remaining: list[tuple[int, ...]]) -> bool:
        if not remaining:
            return True
        if len(chosen) == budget:
            return False
        for x in remaining[0]:
            chosen.append(x)
            if go([S for S in remaining if x not in S]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if go(sets) else None


class _RowSearch:
    def __init__(self, z: int, row_budget: int, col_budget: int, max_nodes: int):
        self.z = z
        self.p = row_budget
        self.q = col_budget
        self.max_nodes = max_nodes
        self.nodes = 0
        self.rows: list[tuple[int, ...]] = []

    def _column_demands(self, c: int) -> Optional[list[tuple[int, ...]]]:
        # sets B_c must hit (beyond c itself), from the rows fixed so far
        demands = []
        for a, A in enumerate(self.rows[:c], start=1):
            if c in A:
                continue
            usable = tuple(k for k in A if k < c)
            if not usable:
                return None
            demands.append(usable)
        return demands

    def _column_ok(self, c: int) -> bool:
        demands = self._column_demands(c)
        return demands is not None and _hitting_set(demands, self.q - 1) is not None

    def run(self) -> bool:
        return self._place(1)

    def _place(self, a: int) -> bool:
        z = self.z
        if a > z:
            return True
        size = min(self.p, z - a + 1)
        for extra in combinations(range(a + 1, z + 1), size - 1):
            if self.nodes >= self.max_nodes:
                raise _NodeLimit
            self.nodes += 1
            self.rows.append((a,) + extra)
            if all(self._column_ok(c) for c in range(a, z + 1)) and self._place(a + 1):
                return True
            self.rows.pop()
        return False

    def witness(self) -> Cover:
        z = self.z
        S = {k: [] for k in range(1, z + 1)}
        T = {k: [] for k in range(1, z + 1)}
        for a, A in enumerate(self.rows, start=1):
            for k in A:
                S[k].append(a)
        for c in range(1, z + 1):
            extra = _hitting_set(self._column_demands(c), self.q - 1)
            for k in (c,) + extra:
                T[k].append(z + 1 - c)
        return Cover(tuple(GenRect(tuple(S[k]), tuple(T[k])) for k in range(1, z + 1)))


def staircase_search(z: int, i: int, j: int, max_nodes: int) -> tuple[Optional[Cover], int]:
    """Decide Y_z under budget (i, j); returns (staircase witness or None, nodes)."""
    transposed = i > j
    p, q = (j, i) if transposed else (i, j)
    search = _RowSearch(z, p, q, max_nodes)
    try:
        found = search.run()
    except _NodeLimit:
        raise CapExceeded(f"node limit {max_nodes} reached", search.nodes) from None
    if not found:
        return None, search.nodes
    W = search.witness()
    return (W.transpose() if transposed else W), search.nodes


def exists_local_cover(Y: YoungDiagram, i: int, j: int, caps: SearchCaps = SearchCaps()) -> FeasibilityReport:
    if i < 1 or j < 1:
        raise InvalidBudget(f"budgets must be positive, got ({i}, {j})")
    z = Y.z
    if z > caps.max_z:
        return FeasibilityReport(Verdict.UNKNOWN, None, 0, f"{z} steps exceed max_z={caps.max_z}")
    try:
        W, nodes = staircase_search(z, i, j, caps.max_nodes)
    except CapExceeded as exc:
        return FeasibilityReport(Verdict.UNKNOWN, None, exc.nodes, str(exc))
    if W is None:
        return FeasibilityReport(Verdict.INFEASIBLE, None, nodes, "search space exhausted")
    witness = expand(Y, W)
    if not check_witness(Y, witness, i, j):
        raise AssertionError("oracle produced an invalid witness")
    return FeasibilityReport(Verdict.FEASIBLE, witness, nodes)


def min_balanced_budget_oracle(Y: YoungDiagram, caps: SearchCaps = SearchCaps()) -> int:
    k = 1
    while True:
        report = exists_local_cover(Y, k, k, caps)
        if report.verdict is Verdict.FEASIBLE:
            return k
        if report.verdict is Verdict.UNKNOWN:
            raise CapExceeded(f"k={k}: {report.reason}", report.nodes_explored)
        k += 1


def check_witness(Y: YoungDiagram, C, i: int, j: int) -> bool:
    C = list(C)
    if not C:
        return False
    for R in C:
        if R.rows[-1] > Y.r or R.cols[-1] > Y.c or R.corner not in Y:
            return False
    return is_cover(Y, C) and locality(Y, C).is_local(i, j)

