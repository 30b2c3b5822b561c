"""Difference graphs, their Young diagrams, and local biclique cover numbers.

A bipartite graph whose side-A neighbourhoods form a chain under inclusion
has a biadjacency matrix whose support is a Young diagram once rows and
columns are sorted by degree. Bicliques of the graph are then exactly the
generalized rectangles of that diagram, which turns the staircase
constructor into an exact local biclique cover.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from ._search import BudgetedCover, NodeLimit
from .constructor import build_partition_for, min_balanced_budget_for_steps
from .diagram import Cover, YoungDiagram
from .errors import DiagramError, NotADifferenceGraph, ParseError
from .oracle import SearchCaps

@dataclass(frozen=True)
class BipartiteGraph:
    side_a: tuple
    side_b: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        side_a, side_b = tuple(self.side_a), tuple(self.side_b)
        if len(set(side_a)) != len(side_a) or len(set(side_b)) != len(side_b):
            raise ValueError("vertex labels must be unique within a side")
        edges = frozenset((a, b) for a, b in self.edges)
        A, B = set(side_a), set(side_b)
        for a, b in edges:
            if a not in A or b not in B:
                raise ValueError(f"edge ({a!r}, {b!r}) leaves the vertex sets")
        object.__setattr__(self, "side_a", side_a)
        object.__setattr__(self, "side_b", side_b)
        object.__setattr__(self, "edges", edges)

    def neighbors_a(self, a) -> frozenset:
        return frozenset(b for x, b in self.edges if x == a)

    def neighbors_b(self, b) -> frozenset:
        return frozenset(a for a, y in self.edges if y == b)

    def degree_a(self, a) -> int:
        return len(self.neighbors_a(a))

    def degree_b(self, b) -> int:
        return len(self.neighbors_b(b))

    def sorted_edges(self) -> list[tuple]:
        pa = {a: n for n, a in enumerate(self.side_a)}
        pb = {b: n for n, b in enumerate(self.side_b)}
        return sorted(self.edges, key=lambda e: (pa[e[0]], pb[e[1]]))

    def subgraph(self, edges: Iterable[tuple]) -> "BipartiteGraph":
        """Edge-induced subgraph on the endpoints of ``edges``."""
        edges = frozenset(edges)
        used_a = {a for a, _ in edges}
        used_b = {b for _, b in edges}
        return BipartiteGraph(
            tuple(a for a in self.side_a if a in used_a),
            tuple(b for b in self.side_b if b in used_b),
            edges,
        )


def complete_bipartite(A: Sequence, B: Sequence) -> BipartiteGraph:
    return BipartiteGraph(tuple(A), tuple(B), frozenset((a, b) for a in A for b in B))


@dataclass(frozen=True)
class DifferenceCertificate:
    ordering: Optional[tuple] = None
    violation: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ordering is not None


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    edges: frozenset

    def out_neighbors(self, v) -> frozenset:
        return frozenset(y for x, y in self.edges if x == v)


@dataclass(frozen=True)
class CoverNumberReport:
    kind: str  # "CB" or "D"
    value: Optional[int]  # None means unknown
    method: str  # "formula" or "brute-force"
    witness: Optional[list] = None  # list of BipartiteGraph pieces
    nodes: int = 0
    reason: str = ""


class YoungEmbedding(NamedTuple):
    diagram: YoungDiagram
    rows: tuple  # side-A label of diagram row s at index s-1
    cols: tuple  # side-B label of diagram column t at index t-1


def _degree_order(labels: Sequence, degree) -> list:
    pos = {v: n for n, v in enumerate(labels)}
    return sorted(labels, key=lambda v: (-degree(v), pos[v]))


def is_difference(H: BipartiteGraph) -> DifferenceCertificate:
    order = _degree_order(H.side_a, H.degree_a)
    for prev, cur in zip(order, order[1:]):
        if not H.neighbors_a(cur) <= H.neighbors_a(prev):
            return DifferenceCertificate(violation=(prev, cur))
    return DifferenceCertificate(ordering=tuple(order))


def to_young(H: BipartiteGraph) -> YoungEmbedding:
    cert = is_difference(H)
    if not cert:
        raise NotADifferenceGraph(f"neighbourhoods of {cert.violation[0]!r} and {cert.violation[1]!r} are incomparable")
    rows = tuple(a for a in cert.ordering if H.degree_a(a) > 0)
    if not rows:
        raise DiagramError("graph has no edges, so there is no diagram")
    cols = tuple(b for b in _degree_order(H.side_b, H.degree_b) if H.degree_b(b) > 0)
    Y = YoungDiagram(tuple(H.degree_a(a) for a in rows))
    col_index = {b: t for t, b in enumerate(cols, start=1)}
    for s, a in enumerate(rows, start=1):
        # nesting puts each neighbourhood on a prefix of the degree-sorted columns
        assert {col_index[b] for b in H.neighbors_a(a)} == set(range(1, Y.row_lengths[s - 1] + 1))
    return YoungEmbedding(Y, rows, cols)


def from_young(Y: YoungDiagram) -> BipartiteGraph:
    side_a = tuple(f"a{s}" for s in range(1, Y.r + 1))
    side_b = tuple(f"b{t}" for t in range(1, Y.c + 1))
    return BipartiteGraph(side_a, side_b, frozenset((f"a{s}", f"b{t}") for s, t in Y.cells()))


def steps_of(H: BipartiteGraph) -> int:
    if not is_difference(H):
        raise NotADifferenceGraph("steps are only defined for difference graphs")
    return len({H.degree_a(a) for a in H.side_a} - {0})


def bicliques_from_rects(Y: YoungDiagram, C: Cover, perms: tuple[Sequence, Sequence]) -> list[tuple[frozenset, frozenset]]:
    rows, cols = perms
    if len(rows) != Y.r or len(cols) != Y.c:
        raise ValueError("permutations do not match the diagram shape")
    return [
        (frozenset(rows[s - 1] for s in R.rows), frozenset(cols[t - 1] for t in R.cols))
        for R in C
    ]


def _biclique_piece(H: BipartiteGraph, A: Iterable, B: Iterable) -> BipartiteGraph:
    A, B = set(A), set(B)
    return H.subgraph((a, b) for a in A for b in B)


def cn_cb_difference(H: BipartiteGraph) -> CoverNumberReport:
    """Exact local biclique cover number of a difference graph, with witness."""
    if not is_difference(H):
        raise NotADifferenceGraph("the closed formula only applies to difference graphs")
    if not H.edges:
        return CoverNumberReport("CB", 0, "formula", [])
    emb = to_young(H)
    k = min_balanced_budget_for_steps(emb.diagram.z)
    C = build_partition_for(emb.diagram, k, k)
    pieces = [_biclique_piece(H, A, B) for A, B in bicliques_from_rects(emb.diagram, C, (emb.rows, emb.cols))]
    return CoverNumberReport("CB", k, "formula", pieces)


def cn_d_difference(H: BipartiteGraph) -> CoverNumberReport:
    if not is_difference(H):
        raise NotADifferenceGraph("the graph itself is not a difference graph")
    if not H.edges:
        return CoverNumberReport("D", 0, "formula", [])
    return CoverNumberReport("D", 1, "formula", [H.subgraph(H.edges)])


def check_cover_report(H: BipartiteGraph, report: CoverNumberReport) -> bool:
    """Validate a witness: union is E(H), per-vertex load <= value, class predicate."""
    if report.value is None or report.witness is None:
        return False
    union: set = set()
    load_a: dict = {}
    load_b: dict = {}
    for piece in report.witness:
        if not piece.edges or not piece.edges <= H.edges:
            return False
        if report.kind == "CB":
            if len(piece.edges) != len(piece.side_a) * len(piece.side_b):
                return False
        elif not is_difference(piece):
            return False
        union |= piece.edges
        for a in piece.side_a:
            load_a[a] = load_a.get(a, 0) + 1
        for b in piece.side_b:
            load_b[b] = load_b.get(b, 0) + 1
    loads = list(load_a.values()) + list(load_b.values())
    return union == set(H.edges) and max(loads, default=0) <= report.value


# --- brute force -----------------------------------------------------------


def _chain_bitmasks(masks: list[int]) -> bool:
    ms = sorted(masks, key=lambda m: -bin(m).count("1"))
    return all(cur & ~prev == 0 for prev, cur in zip(ms, ms[1:]))


class _Instance:
    def __init__(self, H: BipartiteGraph):
        self.H = H
        self.a_index = {a: n for n, a in enumerate(H.side_a)}
        r = len(H.side_a)
        self.b_index = {b: r + n for n, b in enumerate(H.side_b)}
        self.nv = r + len(H.side_b)
        self.edges = H.sorted_edges()
        self.ends = [(1 << self.a_index[a]) | (1 << self.b_index[b]) for a, b in self.edges]
        self.adj = {}
        for e, (a, b) in enumerate(self.edges):
            self.adj[(self.a_index[a], self.b_index[b])] = e

    def vmask_of(self, emask: int) -> int:
        v = 0
        e = 0
        while emask:
            if emask & 1:
                v |= self.ends[e]
            emask >>= 1
            e += 1
        return v

    def biclique_candidates(self) -> list[tuple[int, int]]:
        r = len(self.H.side_a)
        A = [self.a_index[a] for a in self.H.side_a if self.H.degree_a(a) > 0]
        out = []
        for size in range(len(A), 0, -1):
            for As in combinations(A, size):
                common = [b for b in range(r, self.nv) if all((a, b) in self.adj for a in As)]
                for bsize in range(len(common), 0, -1):
                    for Bs in combinations(common, bsize):
                        em = 0
                        for a in As:
                            for b in Bs:
                                em |= 1 << self.adj[(a, b)]
                        vm = 0
                        for v in As + Bs:
                            vm |= 1 << v
                        out.append((vm, em))
        return out

    def difference_candidates(self) -> list[tuple[int, int]]:
        m = len(self.edges)
        r = len(self.H.side_a)
        ea = [self.a_index[a] for a, _ in self.edges]
        eb = [self.b_index[b] - r for _, b in self.edges]
        out = []
        for em in range(1, 1 << m):
            nbr = [0] * r
            x, e = em, 0
            while x:
                if x & 1:
                    nbr[ea[e]] |= 1 << eb[e]
                x >>= 1
                e += 1
            if _chain_bitmasks([n for n in nbr if n]):
                out.append((self.vmask_of(em), em))
        out.sort(key=lambda c: -bin(c[1]).count("1"))
        return out


def cn_local_bruteforce(H: BipartiteGraph, kind: str = "CB", caps: SearchCaps = SearchCaps()) -> CoverNumberReport:
    """Exact local cover number by iterative deepening over k."""
    kind = kind.upper()
    if kind not in ("CB", "D"):
        raise ValueError(f"unknown graph class {kind!r}")
    if not H.edges:
        return CoverNumberReport(kind, 0, "brute-force", [])
    inst = _Instance(H)
    active = sum(1 for a in H.side_a if H.degree_a(a)) + sum(1 for b in H.side_b if H.degree_b(b))
    if kind == "CB" and active > caps.max_vertices_cb:
        return CoverNumberReport(kind, None, "brute-force", reason=f"{active} vertices exceed max_vertices_cb={caps.max_vertices_cb}")
    if kind == "D" and len(inst.edges) > caps.max_edges_d:
        return CoverNumberReport(kind, None, "brute-force", reason=f"{len(inst.edges)} edges exceed max_edges_d={caps.max_edges_d}")
    cands = inst.biclique_candidates() if kind == "CB" else inst.difference_candidates()
    nodes = 0
    k = 1
    while True:
        search = BudgetedCover(inst.ends, inst.nv, cands, k, caps.max_nodes, nodes)
        try:
            found = search.run()
        except NodeLimit as exc:
            return CoverNumberReport(kind, None, "brute-force", nodes=exc.nodes, reason=f"node limit {caps.max_nodes} reached at k={k}")
        nodes = search.nodes
        if found:
            pieces = [H.subgraph(inst.edges[e] for e in range(len(inst.edges)) if em >> e & 1) for _, em in search.chosen]
            return CoverNumberReport(kind, k, "brute-force", pieces, nodes)
        k += 1


def is_ferrers_digraph(D: Digraph) -> bool:
    outs = sorted((D.out_neighbors(v) for v in D.vertices), key=len, reverse=True)
    return all(cur <= prev for prev, cur in zip(outs, outs[1:]))


def orient(H: BipartiteGraph) -> Digraph:
    """All edges directed from side A to side B; vertices tagged by side."""
    vertices = tuple(("A", a) for a in H.side_a) + tuple(("B", b) for b in H.side_b)
    return Digraph(vertices, frozenset((("A", a), ("B", b)) for a, b in H.edges))


# --- text formats ----------------------------------------------------------


def parse_graph(text: str) -> BipartiteGraph:
    """Read either a 0/1 biadjacency matrix with an ``r c`` header or
    adjacency-list lines ``a: b1 b2 ...``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("empty graph file")
    if ":" in lines[0]:
        return _parse_adjlist(lines)
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise ParseError(f"expected 'r c' header, got {lines[0]!r}")
    r, c = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != r:
        raise ParseError(f"expected {r} matrix rows, got {len(body)}")
    side_a = tuple(f"a{s}" for s in range(1, r + 1))
    side_b = tuple(f"b{t}" for t in range(1, c + 1))
    edges = set()
    for s, row in enumerate(body, start=1):
        row = row.replace(" ", "")
        if len(row) != c or set(row) - {"0", "1"}:
            raise ParseError(f"matrix row {s} must be {c} characters of 0/1")
        edges.update((f"a{s}", f"b{t}") for t, ch in enumerate(row, start=1) if ch == "1")
    return BipartiteGraph(side_a, side_b, frozenset(edges))


def _parse_adjlist(lines: list[str]) -> BipartiteGraph:
    side_a, side_b, edges = [], [], set()
    for ln in lines:
        if ":" not in ln:
            raise ParseError(f"expected 'a: b ...', got {ln!r}")
        head, _, tail = ln.partition(":")
        a = head.strip()
        if not a or a in side_a:
            raise ParseError(f"bad or repeated vertex {a!r}")
        side_a.append(a)
        for b in tail.split():
            if b not in side_b:
                side_b.append(b)
            edges.add((a, b))
    return BipartiteGraph(tuple(side_a), tuple(side_b), frozenset(edges))


def format_matrix(H: BipartiteGraph) -> str:
    lines = [f"{len(H.side_a)} {len(H.side_b)}"]
    for a in H.side_a:
        lines.append("".join("1" if (a, b) in H.edges else "0" for b in H.side_b))
    return "\n".join(lines) + "\n"


def format_adjlist(H: BipartiteGraph) -> str:
    lines = []
    for a in H.side_a:
        nb = [str(b) for b in H.side_b if (a, b) in H.edges]
        lines.append(f"{a}: {' '.join(nb)}".rstrip())
    return "\n".join(lines) + "\n"
