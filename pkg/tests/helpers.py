"""Shared generators and independent reference checks for the test suite."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from hypothesis import strategies as st

from youngcover.diagram import Cover, GenRect, YoungDiagram
from youngcover.diffgraph import BipartiteGraph, from_young

# Reconstruction of the left diagram of the introductory figure: 8 rows,
# 7 columns, 5 steps, and it contains (6,2), {2,4,5}x{1,3} and {1,2}x{4,5,6}.
FIG1 = YoungDiagram((7, 6, 6, 4, 4, 2, 2, 1))


@st.composite
def diagrams(draw, max_rows: int = 6, max_cols: int = 6, max_steps: Optional[int] = None) -> YoungDiagram:
    lengths = draw(st.lists(st.integers(1, max_cols), min_size=1, max_size=max_rows))
    lengths.sort(reverse=True)
    if max_steps is not None:
        keep = sorted(set(lengths), reverse=True)[:max_steps]
        lengths = [x if x in keep else keep[-1] for x in lengths]
        lengths.sort(reverse=True)
    return YoungDiagram(tuple(lengths))


def random_diagram(rng: random.Random, max_rows: int = 6, max_cols: int = 6, max_steps: int = 6) -> YoungDiagram:
    r = rng.randint(1, max_rows)
    lengths = sorted((rng.randint(1, max_cols) for _ in range(r)), reverse=True)
    keep = sorted(set(lengths), reverse=True)[:max_steps]
    lengths = sorted((x if x in keep else keep[-1] for x in lengths), reverse=True)
    return YoungDiagram(tuple(lengths))


def _random_rect_through(Y: YoungDiagram, s: int, t: int, rng: random.Random) -> GenRect:
    corners = [(a, b) for a, b in Y.cells() if a >= s and b >= t]
    s2, t2 = rng.choice(corners)
    rows = {s, s2} | {x for x in range(1, s2) if rng.random() < 0.3}
    cols = {t, t2} | {y for y in range(1, t2) if rng.random() < 0.3}
    return GenRect(tuple(rows), tuple(cols))


def random_cover(Y: YoungDiagram, rng: random.Random, extra: int = 3) -> Cover:
    """A random (generally redundant) cover of ``Y`` by generalized rectangles."""
    cells = sorted(Y.cells())
    rects = [_random_rect_through(Y, *rng.choice(cells), rng) for _ in range(rng.randint(0, extra))]
    covered = {c for R in rects for c in R.cells()}
    for cell in cells:
        if cell not in covered:
            R = _random_rect_through(Y, *cell, rng)
            rects.append(R)
            covered.update(R.cells())
    rng.shuffle(rects)
    return Cover(tuple(rects))


def random_difference_graph(rng: random.Random, max_vertices: int = 8) -> BipartiteGraph:
    """Random difference graph on at most ``max_vertices`` vertices with shuffled labels."""
    while True:
        r = rng.randint(1, max_vertices - 1)
        c = rng.randint(1, max_vertices - r)
        lengths = sorted((rng.randint(1, c) for _ in range(r)), reverse=True)
        if lengths[0] == c:
            break
    H = from_young(YoungDiagram(tuple(lengths)))
    isolated_a = rng.randint(0, max_vertices - r - c)
    side_a = list(H.side_a) + [f"x{n}" for n in range(isolated_a)]
    side_b = list(H.side_b)
    rng.shuffle(side_a)
    rng.shuffle(side_b)
    return BipartiteGraph(tuple(side_a), tuple(side_b), H.edges)


def naive_local_cover(Y: YoungDiagram, i: int, j: int) -> Optional[list[GenRect]]:
    """Exhaustive search over arbitrary sets of generalized rectangles.

    No normal form is assumed: any rectangle of ``Y`` may be used any
    number of times up to the row and column budgets. Only usable for
    diagrams with a handful of cells.
    """
    rects = []
    for a in range(1, Y.r + 1):
        for S in combinations(range(1, Y.r + 1), a):
            width = Y.row_lengths[S[-1] - 1]
            for b in range(1, width + 1):
                for T in combinations(range(1, width + 1), b):
                    rects.append(GenRect(S, T))
    cells = sorted(Y.cells())
    failed = set()

    def go(covered: frozenset, rows: tuple, cols: tuple, chosen: list) -> Optional[list]:
        todo = [c for c in cells if c not in covered]
        if not todo:
            return list(chosen)
        key = (covered, rows, cols)
        if key in failed:
            return None
        cell = todo[0]
        for R in rects:
            if cell not in R:
                continue
            if any(rows[s - 1] >= i for s in R.rows) or any(cols[t - 1] >= j for t in R.cols):
                continue
            nr = list(rows)
            nc = list(cols)
            for s in R.rows:
                nr[s - 1] += 1
            for t in R.cols:
                nc[t - 1] += 1
            chosen.append(R)
            got = go(covered | frozenset(R.cells()), tuple(nr), tuple(nc), chosen)
            if got is not None:
                return got
            chosen.pop()
        failed.add(key)
        return None

    return go(frozenset(), (0,) * Y.r, (0,) * Y.c, [])


def all_posets(n: int):
    """Every labelled strict partial order on ``1..n`` as a set of pairs."""
    pairs = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x != y]
    for mask in range(1 << len(pairs)):
        rel = {pairs[e] for e in range(len(pairs)) if mask >> e & 1}
        if any((y, x) in rel for x, y in rel):
            continue
        if all((x, w) in rel for x, y in rel for v, w in rel if v == y):
            yield rel


def brute_rect_in(Y: YoungDiagram, R: GenRect) -> bool:
    return all(cell in Y for cell in R.cells())

