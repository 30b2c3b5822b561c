"""Optimal (i,j)-local partitions of staircases and the exact feasibility threshold."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .diagram import Cover, GenRect, YoungDiagram
from .errors import CapacityOverflow, Infeasible, InvalidBudget
from .reduction import expand

# Largest staircase the constructor will materialise (rectangle count).
MAX_BUILD = 1_000_000


@dataclass(frozen=True)
class Budget:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise InvalidBudget(f"budgets must be positive, got ({self.i}, {self.j})")


def _check_budget(i: int, j: int) -> None:
    Budget(i, j)


def capacity(i: int, j: int) -> int:
    """Largest step count admitting an (i,j)-local cover: C(i+j, i) - 1."""
    _check_budget(i, j)
    return comb(i + j, i) - 1


@lru_cache(maxsize=None)
def capacity_recursive(i: int, j: int) -> int:
    """Same table filled by the Pascal-type recursion; used as a cross-check."""
    if i == 1:
        return j
    if j == 1:
        return i
    return capacity_recursive(i - 1, j) + capacity_recursive(i, j - 1) + 1


def feasible(i: int, j: int, z: int) -> bool:
    if z < 1:
        raise ValueError(f"step count must be positive, got {z}")
    return z <= capacity(i, j)


def min_balanced_budget_for_steps(z: int) -> int:
    if z < 1:
        raise ValueError(f"step count must be positive, got {z}")
    k = 1
    while comb(2 * k, k) <= z:
        k += 1
    return k


def min_balanced_budget(Y: YoungDiagram) -> int:
    """Smallest k such that Y admits a (k,k)-local cover."""
    return min_balanced_budget_for_steps(Y.z)


def _build(i: int, j: int, row0: int, col0: int, out: list[GenRect]) -> None:
    # Appends a partition of a copy of Y_f(i,j) whose cell (1,1) sits at
    # (row0 + 1, col0 + 1).
    if i == 1:
        for s in range(1, j + 1):
            out.append(GenRect((row0 + s,), tuple(col0 + t for t in range(1, j + 2 - s))))
        return
    if j == 1:
        for t in range(1, i + 1):
            out.append(GenRect(tuple(row0 + s for s in range(1, i + 2 - t)), (col0 + t,)))
        return
    z = capacity(i, j)
    a = capacity(i - 1, j) + 1
    width = z + 1 - a
    out.append(GenRect(tuple(range(row0 + 1, row0 + a + 1)), tuple(range(col0 + 1, col0 + width + 1))))
    _build(i - 1, j, row0, col0 + width, out)
    _build(i, j - 1, row0 + a, col0, out)


def build_staircase_partition(i: int, j: int) -> Cover:
    """Partition of Y_f(i,j) into f(i,j) actual rectangles, (i,j)-local."""
    z = capacity(i, j)
    if z > MAX_BUILD:
        raise CapacityOverflow(f"capacity({i}, {j}) = {z} exceeds the build limit {MAX_BUILD}")
    out: list[GenRect] = []
    _build(i, j, 0, 0, out)
    return Cover(tuple(out))


def restrict_to_suffix(C: Cover, z_new: int) -> Cover:
    """Keep the last ``z_new`` rows of a staircase cover and shift them up."""
    z = max(R.rows[-1] for R in C)
    if not 1 <= z_new <= z:
        raise ValueError(f"target size {z_new} outside 1..{z}")
    shift = z - z_new
    out = []
    for R in C:
        rows = tuple(s - shift for s in R.rows if s > shift)
        if rows:
            out.append(GenRect(rows, R.cols))
    return Cover(tuple(out))


def build_partition_for(Y: YoungDiagram, i: int, j: int) -> Cover:
    z = Y.z
    if not feasible(i, j, z):
        raise Infeasible(f"{z} steps exceed capacity({i}, {j}) = {capacity(i, j)}")
    # the smallest table entry that still fits z keeps the build small
    ii, jj = _smallest_fitting_budget(i, j, z)
    base = restrict_to_suffix(build_staircase_partition(ii, jj), z)
    return expand(Y, base)


def _smallest_fitting_budget(i: int, j: int, z: int) -> tuple[int, int]:
    # shrinking a budget never breaks locality for the original (i, j)
    ii, jj = i, j
    while ii > 1 and capacity(ii - 1, jj) >= z:
        ii -= 1
    while jj > 1 and capacity(ii, jj - 1) >= z:
        jj -= 1
    return ii, jj
