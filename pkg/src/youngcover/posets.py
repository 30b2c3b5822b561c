"""Finite posets, splits, critical-pair graphs and local dimension.

A partial linear extension (PLE) is a tuple of distinct elements listed in
an order compatible with the poset. A local realizer is a nonempty list of
PLEs that shows every comparable pair in its order and every incomparable
pair in both orders.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import networkx as nx

from ._search import BudgetedCover, NodeLimit
from .diffgraph import (
    BipartiteGraph,
    CoverNumberReport,
    cn_cb_difference,
    cn_d_difference,
    cn_local_bruteforce,
    is_difference,
)
from .errors import CapExceeded, CycleDetected, ForeignElement, NotHeightTwo, ParseError
from .oracle import SearchCaps


@dataclass(frozen=True)
class Poset:
    elements: tuple
    less: frozenset  # strict order, transitively closed

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    def le(self, x, y) -> bool:
        return x == y or (x, y) in self.less

    def comparable(self, x, y) -> bool:
        return self.le(x, y) or self.le(y, x)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def covers(self) -> frozenset:
        g = nx.DiGraph(list(self.less))
        g.add_nodes_from(self.elements)
        return frozenset(nx.transitive_reduction(g).edges)

    def minimal(self) -> tuple:
        return tuple(x for x in self.elements if not any(self.lt(y, x) for y in self.elements))

    def maximal(self) -> tuple:
        return tuple(x for x in self.elements if not any(self.lt(x, y) for y in self.elements))

    def height(self) -> int:
        g = nx.DiGraph(list(self.less))
        g.add_nodes_from(self.elements)
        return nx.dag_longest_path_length(g) + 1

    def incomparable_pairs(self) -> list[tuple]:
        return [(x, y) for x, y in combinations(self.elements, 2) if not self.comparable(x, y)]


def poset_from_relations(elements: Sequence, pairs: Iterable[tuple]) -> Poset:
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("poset elements must be distinct")
    known = set(elements)
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    for x, y in pairs:
        if x not in known or y not in known:
            raise ForeignElement(f"relation ({x!r}, {y!r}) mentions an unknown element")
        if x == y:
            raise CycleDetected(f"{x!r} < {x!r} is not a strict order")
        g.add_edge(x, y)
    if not nx.is_directed_acyclic_graph(g):
        cycle = nx.find_cycle(g)
        raise CycleDetected(f"relations contain a cycle through {cycle[0][0]!r}")
    closure = nx.transitive_closure_dag(g)
    return Poset(elements, frozenset(closure.edges))


def make_poset(n: int, strict_pairs: Iterable[tuple[int, int]]) -> Poset:
    """Poset on ``1..n`` generated by the given strict relations."""
    if n < 1:
        raise ValueError("a poset needs at least one element")
    return poset_from_relations(tuple(range(1, n + 1)), strict_pairs)


def split(P: Poset) -> Poset:
    """Height-two poset with ``x' < y''`` exactly when ``x <= y``."""
    low = {x: f"{x}'" for x in P.elements}
    high = {x: f"{x}''" for x in P.elements}
    pairs = [(low[x], high[y]) for x in P.elements for y in P.elements if P.le(x, y)]
    return poset_from_relations(tuple(low.values()) + tuple(high.values()), pairs)


def critical_graph(P: Poset) -> BipartiteGraph:
    """Bipartite graph on min(P) and the rest, joining incomparable pairs."""
    if P.height() > 2:
        raise NotHeightTwo(f"poset has height {P.height()}")
    A = P.minimal()
    Aset = set(A)
    B = tuple(x for x in P.elements if x not in Aset)
    edges = frozenset((a, b) for a in A for b in B if not P.comparable(a, b))
    return BipartiteGraph(A, B, edges)


def is_ple(P: Poset, seq: Sequence) -> bool:
    if len(set(seq)) != len(seq):
        return False
    return not any(P.lt(seq[q], seq[p]) for p in range(len(seq)) for q in range(p + 1, len(seq)))


def _demands(P: Poset) -> list[tuple]:
    out = []
    for x, y in combinations(P.elements, 2):
        if P.lt(x, y):
            out.append((x, y))
        elif P.lt(y, x):
            out.append((y, x))
        else:
            out.extend([(x, y), (y, x)])
    return out


def check_local_realizer(P: Poset, realizer: Sequence[Sequence], k: int) -> bool:
    if not realizer:
        return False
    known = set(P.elements)
    for L in realizer:
        for x in L:
            if x not in known:
                raise ForeignElement(f"{x!r} is not an element of the poset")
    if not all(is_ple(P, L) for L in realizer):
        return False
    shown = set()
    load = {x: 0 for x in P.elements}
    for L in realizer:
        for p, x in enumerate(L):
            load[x] += 1
            for y in L[p + 1:]:
                shown.add((x, y))
    if any(v > k for v in load.values()):
        return False
    return all(d in shown for d in _demands(P))


def all_ples(P: Poset) -> list[tuple]:
    """Every PLE on at least two elements, longest first."""
    out = []
    for size in range(P.n, 1, -1):
        for subset in combinations(P.elements, size):
            for seq in permutations(subset):
                if is_ple(P, seq):
                    out.append(seq)
    return out


def local_realizer(P: Poset, k: int, caps: SearchCaps = SearchCaps()) -> Optional[list[tuple]]:
    """A local realizer using each element at most ``k`` times, or None."""
    if P.n > caps.max_poset:
        raise CapExceeded(f"{P.n} elements exceed max_poset={caps.max_poset}")
    demands = _demands(P)
    if not demands:
        return [(P.elements[0],)]
    bit = {x: 1 << n for n, x in enumerate(P.elements)}
    item_agents = [bit[x] | bit[y] for x, y in demands]
    index = {d: e for e, d in enumerate(demands)}
    cands = []
    seqs = all_ples(P)
    for seq in seqs:
        items = 0
        for p, x in enumerate(seq):
            for y in seq[p + 1:]:
                items |= 1 << index[(x, y)]
        agents = 0
        for x in seq:
            agents |= bit[x]
        cands.append((agents, items))
    lookup = {c: s for c, s in zip(cands, seqs)}
    search = BudgetedCover(item_agents, P.n, cands, k, caps.max_nodes)
    try:
        found = search.run()
    except NodeLimit as exc:
        raise CapExceeded(f"node limit {caps.max_nodes} reached at k={k}", exc.nodes) from None
    if not found:
        return None
    return sorted(lookup[c] for c in search.chosen)


def ldim_brute(P: Poset, caps: SearchCaps = SearchCaps()) -> int:
    k = 1
    while local_realizer(P, k, caps) is None:
        k += 1
    return k


@dataclass
class LdimBounds:
    lower: int
    upper: Optional[int]
    trace: list[str] = field(default_factory=list)

    def contains(self, value: int) -> bool:
        return self.lower <= value and (self.upper is None or value <= self.upper)


def _cover_number(G: BipartiteGraph, kind: str, caps: SearchCaps) -> CoverNumberReport:
    if is_difference(G):
        return cn_cb_difference(G) if kind == "CB" else cn_d_difference(G)
    return cn_local_bruteforce(G, kind, caps)


def _show(value: Optional[int]) -> str:
    return "unknown" if value is None else str(value)


def ldim_bounds(P: Poset, caps: SearchCaps = SearchCaps()) -> LdimBounds:
    trace = []
    direct = P.height() <= 2
    Q = P if direct else split(P)
    if not direct:
        trace.append(f"height {P.height()} > 2: bound through the split Q on {Q.n} elements")
    name = "P" if direct else "Q"
    G = critical_graph(Q)
    trace.append(f"G_{name}: {len(G.side_a)}+{len(G.side_b)} vertices, {len(G.edges)} edges")
    d = _cover_number(G, "D", caps)
    cb = _cover_number(G, "CB", caps)
    trace.append(f"cn_D(G_{name}) = {_show(d.value)} ({d.method})")
    trace.append(f"cn_CB(G_{name}) = {_show(cb.value)} ({cb.method})")
    slack = 2 if direct else 4
    if d.value is None:
        lower = 1
        trace.append("lower = 1 (cn_D unknown)")
    else:
        lower = max(1, d.value - slack)
        trace.append(f"lower = max(1, cn_D - {slack}) = {lower}")
    if cb.value is None:
        upper = None
        trace.append("upper unknown (cn_CB unknown)")
    elif direct:
        upper = cb.value + 2
        trace.append(f"upper = cn_CB + 2 = {upper}")
    else:
        upper = 2 * (cb.value + 2) - 1
        trace.append(f"ldim(Q) <= cn_CB + 2 = {cb.value + 2}; upper = 2*ldim(Q) - 1 = {upper}")
    return LdimBounds(lower, upper, trace)


def standard_example(m: int) -> Poset:
    """``a_p < b_q`` exactly when ``p != q``; elements ``a1..am, b1..bm``."""
    A = [f"a{p}" for p in range(1, m + 1)]
    B = [f"b{q}" for q in range(1, m + 1)]
    pairs = [(A[p], B[q]) for p in range(m) for q in range(m) if p != q]
    return poset_from_relations(tuple(A + B), pairs)


# --- text format -----------------------------------------------------------


def parse_poset(text: str) -> Poset:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].isdigit():
        raise ParseError("first line must be the element count n")
    n = int(lines[0])
    pairs = []
    for ln in lines[1:]:
        parts = ln.split("<")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise ParseError(f"expected 'u < v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"label out of range in {ln!r}")
        pairs.append((u, v))
    return make_poset(n, pairs)


def relabel(P: Poset) -> Poset:
    """Same order on ``1..n`` following the element order."""
    index = {x: n for n, x in enumerate(P.elements, start=1)}
    return make_poset(P.n, [(index[x], index[y]) for x, y in P.less])


def format_poset(P: Poset) -> str:
    """Cover relations in the text format; labels must be ``1..n``."""
    lines = [str(P.n)] + [f"{u} < {v}" for u, v in sorted(P.covers)]
    return "\n".join(lines) + "\n"
