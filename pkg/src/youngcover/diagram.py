"""Young diagrams, generalized rectangles, covers and locality accounting.

All indices are 1-based: row ``s`` ranges over ``1..r`` and column ``t``
over ``1..c``. A diagram is stored as its weakly decreasing row-length
profile, so membership is a single comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    IndexOutOfRange,
    NonPositiveLength,
    NotWeaklyDecreasing,
    RectOutsideDiagram,
)


@dataclass(frozen=True)
class YoungDiagram:
    row_lengths: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(x) for x in self.row_lengths)
        if not rows:
            raise NonPositiveLength("a diagram needs at least one row")
        for s, length in enumerate(rows, start=1):
            if length < 1:
                raise NonPositiveLength(f"row {s} has length {length}")
        for s in range(1, len(rows)):
            if rows[s] > rows[s - 1]:
                raise NotWeaklyDecreasing(
                    f"row {s + 1} (length {rows[s]}) is longer than row {s} (length {rows[s - 1]})"
                )
        object.__setattr__(self, "row_lengths", rows)

    @property
    def r(self) -> int:
        return len(self.row_lengths)

    @property
    def c(self) -> int:
        return self.row_lengths[0]

    @property
    def z(self) -> int:
        return len(set(self.row_lengths))

    def __contains__(self, cell) -> bool:
        s, t = cell
        return 1 <= s <= self.r and 1 <= t <= self.row_lengths[s - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for s, length in enumerate(self.row_lengths, start=1):
            for t in range(1, length + 1):
                yield (s, t)

    def size(self) -> int:
        return sum(self.row_lengths)

    def column_length(self, t: int) -> int:
        return sum(1 for length in self.row_lengths if length >= t)

    def transpose(self) -> "YoungDiagram":
        return YoungDiagram(tuple(self.column_length(t) for t in range(1, self.c + 1)))

    def __str__(self) -> str:
        return " ".join(map(str, self.row_lengths))


class Step(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class GenRect:
    """The product ``rows x cols`` of two nonempty index sets."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(sorted(set(int(x) for x in self.rows)))
        cols = tuple(sorted(set(int(x) for x in self.cols)))
        if not rows or not cols:
            raise ValueError("a rectangle needs at least one row and one column")
        if rows[0] < 1 or cols[0] < 1:
            raise IndexOutOfRange("indices are 1-based")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def is_actual(self) -> bool:
        return _is_interval(self.rows) and _is_interval(self.cols)

    @property
    def corner(self) -> tuple[int, int]:
        return (self.rows[-1], self.cols[-1])

    def cells(self) -> Iterator[tuple[int, int]]:
        for s in self.rows:
            for t in self.cols:
                yield (s, t)

    def __contains__(self, cell) -> bool:
        s, t = cell
        return s in self.rows and t in self.cols

    def transpose(self) -> "GenRect":
        return GenRect(self.cols, self.rows)

    def to_dict(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


def _is_interval(xs: Sequence[int]) -> bool:
    return xs[-1] - xs[0] + 1 == len(xs)


def rect(rows: Iterable[int], cols: Iterable[int]) -> GenRect:
    return GenRect(tuple(rows), tuple(cols))


@dataclass(frozen=True)
class Cover:
    rects: tuple[GenRect, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rects", tuple(self.rects))

    def __iter__(self) -> Iterator[GenRect]:
        return iter(self.rects)

    def __len__(self) -> int:
        return len(self.rects)

    def __getitem__(self, idx):
        return self.rects[idx]

    def __add__(self, other: "Cover") -> "Cover":
        return Cover(self.rects + tuple(other))

    @property
    def all_actual(self) -> bool:
        return all(R.is_actual for R in self.rects)

    def transpose(self) -> "Cover":
        return Cover(tuple(R.transpose() for R in self.rects))

    def to_list(self) -> list[dict]:
        return [R.to_dict() for R in self.rects]

    @classmethod
    def from_list(cls, items: Iterable[dict]) -> "Cover":
        return cls(tuple(GenRect(tuple(d["rows"]), tuple(d["cols"])) for d in items))


@dataclass(frozen=True)
class LocalityProfile:
    row_usage: tuple[int, ...]
    col_usage: tuple[int, ...]

    @property
    def max_row(self) -> int:
        return max(self.row_usage, default=0)

    @property
    def max_col(self) -> int:
        return max(self.col_usage, default=0)

    def is_local(self, i: int, j: int) -> bool:
        return self.max_row <= i and self.max_col <= j

    def __add__(self, other: "LocalityProfile") -> "LocalityProfile":
        return LocalityProfile(
            tuple(a + b for a, b in zip(self.row_usage, other.row_usage)),
            tuple(a + b for a, b in zip(self.col_usage, other.col_usage)),
        )

    def dominated_by(self, other: "LocalityProfile") -> bool:
        """Pointwise comparison; profiles must belong to the same diagram."""
        return all(a <= b for a, b in zip(self.row_usage, other.row_usage)) and all(
            a <= b for a, b in zip(self.col_usage, other.col_usage)
        )


def make_diagram(row_lengths: Iterable[int]) -> YoungDiagram:
    return YoungDiagram(tuple(row_lengths))


def staircase(z: int) -> YoungDiagram:
    if z < 1:
        raise NonPositiveLength(f"staircase size must be positive, got {z}")
    return YoungDiagram(tuple(range(z, 0, -1)))


def steps(Y: YoungDiagram) -> list[Step]:
    """Cells with nothing below and nothing to the right, by increasing row."""
    out = []
    lengths = Y.row_lengths
    for s in range(1, Y.r + 1):
        below = lengths[s] if s < Y.r else 0
        if lengths[s - 1] > below:
            out.append(Step(s, lengths[s - 1]))
    return out


def _check_indices(Y: YoungDiagram, R: GenRect) -> None:
    if R.rows[-1] > Y.r or R.cols[-1] > Y.c:
        raise IndexOutOfRange(f"{R} exceeds the {Y.r}x{Y.c} grid")


def rect_in_diagram(Y: YoungDiagram, R: GenRect) -> bool:
    # downward-left closure: the extreme corner decides
    _check_indices(Y, R)
    return R.corner in Y


def _require_inside(Y: YoungDiagram, C: Iterable[GenRect]) -> None:
    for idx, R in enumerate(C, start=1):
        if R.rows[-1] > Y.r or R.cols[-1] > Y.c or R.corner not in Y:
            raise RectOutsideDiagram(f"rectangle {idx} {R.to_dict()} is not contained in the diagram")


def locality(Y: YoungDiagram, C: Iterable[GenRect]) -> LocalityProfile:
    C = list(C)
    _require_inside(Y, C)
    row_usage = [0] * Y.r
    col_usage = [0] * Y.c
    for R in C:
        for s in R.rows:
            row_usage[s - 1] += 1
        for t in R.cols:
            col_usage[t - 1] += 1
    return LocalityProfile(tuple(row_usage), tuple(col_usage))


def is_local(Y: YoungDiagram, C: Iterable[GenRect], i: int, j: int) -> bool:
    return locality(Y, C).is_local(i, j)


def covered_cells(C: Iterable[GenRect]) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for R in C:
        out.update(R.cells())
    return out


def is_cover(Y: YoungDiagram, C: Iterable[GenRect]) -> bool:
    C = list(C)
    _require_inside(Y, C)
    return covered_cells(C) == set(Y.cells())


def is_partition(Y: YoungDiagram, C: Iterable[GenRect]) -> bool:
    C = list(C)
    if not is_cover(Y, C):
        return False
    return sum(len(R.rows) * len(R.cols) for R in C) == Y.size()


def render_ascii(Y: YoungDiagram, C: Cover | None = None) -> str:
    """Grid rendering; with a cover each cell shows its lowest-index rectangle."""
    if C is None:
        return "\n".join("#" * length for length in Y.row_lengths)
    _require_inside(Y, C)
    label: dict[tuple[int, int], int] = {}
    for idx, R in reversed(list(enumerate(C, start=1))):
        for cell in R.cells():
            label[cell] = idx
    width = len(str(len(C)))
    lines = []
    for s, length in enumerate(Y.row_lengths, start=1):
        tokens = [str(label.get((s, t), ".")).rjust(width) for t in range(1, length + 1)]
        lines.append(" ".join(tokens))
    return "\n".join(lines)
