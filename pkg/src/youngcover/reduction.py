"""Move covers between an arbitrary z-step diagram and the staircase Y_z.

``compress`` merges redundant rectangles and then deletes rows and columns
that carry no step; ``expand`` blows each cell of Y_z up into the block of
the target diagram between consecutive step rows and step columns.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    Cover,
    GenRect,
    YoungDiagram,
    is_cover,
    locality,
    staircase,
    steps,
)
from .errors import NotACover, StepCountMismatch, YoungCoverError


@dataclass(frozen=True)
class StepIndexing:
    step_rows: tuple[int, ...]  # s_0 = 0, s_1 < ... < s_z
    step_cols: tuple[int, ...]  # t_0 = 0, t_1 < ... < t_z

    @property
    def z(self) -> int:
        return len(self.step_rows) - 1

    @classmethod
    def of(cls, Y: YoungDiagram) -> "StepIndexing":
        Z = steps(Y)
        rows = (0,) + tuple(st.row for st in Z)
        cols = (0,) + tuple(sorted(st.col for st in Z))
        return cls(rows, cols)

    def row_block(self, x: int) -> range:
        return range(self.step_rows[x - 1] + 1, self.step_rows[x] + 1)

    def col_block(self, y: int) -> range:
        return range(self.step_cols[y - 1] + 1, self.step_cols[y] + 1)


def _require_cover(Y: YoungDiagram, C) -> None:
    if not is_cover(Y, C):
        raise NotACover("the given rectangles do not cover the diagram")


def _below(R: GenRect, s: int, t: int) -> bool:
    return R.rows[-1] <= s and R.cols[-1] <= t


def merge_reduce(Y: YoungDiagram, C: Cover) -> Cover:
    """Merge rectangles sharing a dominating step until at most z remain.

    Two rectangles inside ``[s] x [t]`` for a step ``(s, t)`` are replaced by
    ``(S1 | S2) x (T1 | T2)``, which stays inside ``[s] x [t]`` and uses no
    new row or column.
    """
    _require_cover(Y, C)
    rects = list(C)
    Z = steps(Y)
    while len(rects) > len(Z):
        for st in Z:
            under = [idx for idx, R in enumerate(rects) if _below(R, st.row, st.col)]
            if len(under) >= 2:
                a, b = under[0], under[1]
                Ra, Rb = rects[a], rects[b]
                rects[a] = GenRect(Ra.rows + Rb.rows, Ra.cols + Rb.cols)
                del rects[b]
                break
        else:
            # pigeonhole guarantees a pair; reaching here means a bug upstream
            raise YoungCoverError(
                f"{len(rects)} rectangles exceed {len(Z)} steps but no step dominates two of them"
            )
    return Cover(tuple(rects))


def _delete_row(rects: list[GenRect], lengths: list[int], s: int) -> list[GenRect]:
    del lengths[s - 1]
    out = []
    for R in rects:
        rows = tuple(x if x < s else x - 1 for x in R.rows if x != s)
        out.append(GenRect(rows, R.cols))
    return out


def _delete_col(rects: list[GenRect], lengths: list[int], t: int) -> list[GenRect]:
    for idx, length in enumerate(lengths):
        if length >= t:
            lengths[idx] = length - 1
    out = []
    for R in rects:
        cols = tuple(y if y < t else y - 1 for y in R.cols if y != t)
        out.append(GenRect(R.rows, cols))
    return out


def compress(Y: YoungDiagram, C: Cover) -> tuple[YoungDiagram, Cover]:
    """Return ``(Y_z, cover of Y_z with exactly z rectangles)``."""
    merged = merge_reduce(Y, C)
    rects = list(merged)
    lengths = list(Y.row_lengths)
    # every remaining rectangle holds exactly one step, so no rectangle
    # loses all of its rows or columns below
    while True:
        step_rows = {st.row for st in steps(YoungDiagram(tuple(lengths)))}
        unused = [s for s in range(1, len(lengths) + 1) if s not in step_rows]
        if not unused:
            break
        rects = _delete_row(rects, lengths, unused[0])
    while True:
        step_cols = set(lengths)
        unused = [t for t in range(1, lengths[0] + 1) if t not in step_cols]
        if not unused:
            break
        rects = _delete_col(rects, lengths, unused[0])
    Yz = YoungDiagram(tuple(lengths))
    assert Yz == staircase(Y.z)
    return Yz, Cover(tuple(rects))


def expand(Y: YoungDiagram, C: Cover) -> Cover:
    """Lift a cover of Y_z onto ``Y`` (which must have z steps)."""
    idx = StepIndexing.of(Y)
    z = idx.z
    extent = max((max(R.rows[-1], R.cols[-1]) for R in C), default=0)
    if extent != z:
        raise StepCountMismatch(f"cover spans a {extent}-step staircase, diagram has {z} steps")
    Yz = staircase(z)
    _require_cover(Yz, C)
    out = []
    for R in C:
        rows = [s for x in R.rows for s in idx.row_block(x)]
        cols = [t for y in R.cols for t in idx.col_block(y)]
        out.append(GenRect(tuple(rows), tuple(cols)))
    return Cover(tuple(out))


def roundtrip_check(Y: YoungDiagram, C: Cover) -> bool:
    Yz, compressed = compress(Y, C)
    back = expand(Y, compressed)
    if not is_cover(Y, back):
        return False
    before = locality(Y, C)
    after = locality(Y, back)
    return after.max_row <= before.max_row and after.max_col <= before.max_col
