"""Command-line front end.

Exit codes: 0 success or feasible, 1 well-formed negative answer, 2 input or
parse error, 3 search cap exceeded (answer unknown).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import constructor, diffgraph, oracle, posets, reduction
from .diagram import YoungDiagram, is_cover, render_ascii, staircase, steps
from .errors import (
    CapExceeded,
    Infeasible,
    NotADifferenceGraph,
    NotHeightTwo,
    YoungCoverError,
)
from .formats import cover_document, dumps, format_diagram, parse_cover, parse_diagram

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class Negative(Exception):
    """Well-formed negative answer; message goes to stdout."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _caps(args) -> oracle.SearchCaps:
    d = oracle.SearchCaps()
    return oracle.SearchCaps(
        max_nodes=getattr(args, "max_nodes", None) or d.max_nodes,
        max_z=getattr(args, "max_z", None) or d.max_z,
        max_vertices_cb=getattr(args, "max_vertices", None) or d.max_vertices_cb,
        max_edges_d=getattr(args, "max_edges", None) or d.max_edges_d,
        max_poset=getattr(args, "max_poset", None) or d.max_poset,
    )


def _diagram(args) -> YoungDiagram:
    return parse_diagram(_read(args.diagram))


def _piece_json(piece: diffgraph.BipartiteGraph) -> dict:
    return {
        "a": [str(a) for a in piece.side_a],
        "b": [str(b) for b in piece.side_b],
        "edges": [[str(a), str(b)] for a, b in piece.sorted_edges()],
    }


# --- subcommands -------------------------------------------------------------


def cmd_construct(args) -> str:
    if args.diagram is None:
        Y = staircase(constructor.capacity(args.i, args.j))
        C = constructor.build_staircase_partition(args.i, args.j)
    else:
        Y = _diagram(args)
        try:
            C = constructor.build_partition_for(Y, args.i, args.j)
        except Infeasible:
            raise Negative("infeasible")
    return dumps(cover_document(Y, C, budget={"i": args.i, "j": args.j}))


def cmd_feasible(args) -> str:
    if constructor.feasible(args.i, args.j, args.steps):
        return "feasible\n"
    raise Negative("infeasible")


def cmd_oracle(args) -> str:
    Y = _diagram(args)
    report = oracle.exists_local_cover(Y, args.i, args.j, _caps(args))
    doc = {
        "verdict": report.verdict.value,
        "z": Y.z,
        "budget": {"i": args.i, "j": args.j},
        "nodes": report.nodes_explored,
        "reason": report.reason,
        "witness": None if report.witness is None else cover_document(Y, report.witness),
    }
    out = dumps(doc)
    if report.verdict is oracle.Verdict.UNKNOWN:
        raise CapExceeded(report.reason, report.nodes_explored)
    if report.verdict is oracle.Verdict.INFEASIBLE:
        raise Negative(out.rstrip("\n"))
    return out


def cmd_min_k(args) -> str:
    Y = _diagram(args)
    if args.method == "oracle":
        return f"{oracle.min_balanced_budget_oracle(Y, _caps(args))}\n"
    return f"{constructor.min_balanced_budget(Y)}\n"


def cmd_steps(args) -> str:
    Y = _diagram(args)
    return dumps({"z": Y.z, "steps": [[st.row, st.col] for st in steps(Y)]})


def cmd_compress(args) -> str:
    Y = _diagram(args)
    C = parse_cover(_read(args.cover))
    Yz, Cz = reduction.compress(Y, C)
    return dumps(cover_document(Yz, Cz))


def cmd_expand(args) -> str:
    Y = _diagram(args)
    C = parse_cover(_read(args.cover))
    return dumps(cover_document(Y, reduction.expand(Y, C)))


def cmd_graph2diagram(args) -> str:
    H = diffgraph.parse_graph(_read(args.graph))
    cert = diffgraph.is_difference(H)
    if not cert:
        a, b = cert.violation
        raise Negative(f"not a difference graph: {a} and {b} have incomparable neighbourhoods")
    emb = diffgraph.to_young(H)
    if args.json:
        return dumps({
            "diagram": list(emb.diagram.row_lengths),
            "rows": [str(a) for a in emb.rows],
            "cols": [str(b) for b in emb.cols],
        })
    return format_diagram(emb.diagram)


def cmd_diagram2graph(args) -> str:
    return diffgraph.format_matrix(diffgraph.from_young(_diagram(args)))


def cmd_graph_cn(args) -> str:
    H = diffgraph.parse_graph(_read(args.graph))
    kind = args.kind.upper()
    if args.brute:
        report = diffgraph.cn_local_bruteforce(H, kind, _caps(args))
    else:
        try:
            report = diffgraph.cn_cb_difference(H) if kind == "CB" else diffgraph.cn_d_difference(H)
        except NotADifferenceGraph:
            raise Negative("not a difference graph; rerun with --brute")
    if report.value is None:
        raise CapExceeded(report.reason, report.nodes)
    return dumps({
        "kind": report.kind,
        "value": report.value,
        "method": report.method,
        "nodes": report.nodes,
        "witness": [_piece_json(p) for p in report.witness],
    })


def cmd_poset_split(args) -> str:
    P = posets.parse_poset(_read(args.poset))
    return posets.format_poset(posets.relabel(posets.split(P)))


def cmd_poset_graph(args) -> str:
    P = posets.parse_poset(_read(args.poset))
    return diffgraph.format_adjlist(posets.critical_graph(P))


def cmd_ldim(args) -> str:
    P = posets.parse_poset(_read(args.poset))
    caps = _caps(args)
    if not args.brute:
        b = posets.ldim_bounds(P, caps)
        return dumps({"lower": b.lower, "upper": b.upper})
    k = posets.ldim_brute(P, caps)
    realizer = posets.local_realizer(P, k, caps)
    return dumps({"ldim": k, "realizer": [list(L) for L in realizer]})


def cmd_ldim_bounds(args) -> str:
    P = posets.parse_poset(_read(args.poset))
    b = posets.ldim_bounds(P, _caps(args))
    return dumps({"lower": b.lower, "upper": b.upper, "trace": b.trace})


def cmd_render(args) -> str:
    Y = _diagram(args)
    C = parse_cover(_read(args.cover)) if args.cover else None
    if C is not None and not is_cover(Y, C):
        raise Negative("the given rectangles do not cover the diagram")
    return render_ascii(Y, C) + "\n"


# --- parser ------------------------------------------------------------------


def _add_caps(p, *names):
    d = oracle.SearchCaps()
    if "nodes" in names:
        p.add_argument("--max-nodes", type=int, default=d.max_nodes, help="search node limit")
    if "z" in names:
        p.add_argument("--max-z", type=int, default=d.max_z, help="largest step count searched")
    if "graph" in names:
        p.add_argument("--max-vertices", type=int, default=d.max_vertices_cb, help="vertex limit for biclique brute force")
        p.add_argument("--max-edges", type=int, default=d.max_edges_d, help="edge limit for difference-graph brute force")
    if "poset" in names:
        p.add_argument("--max-poset", type=int, default=d.max_poset, help="element limit for ldim brute force")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="youngcover", description="Local covers of Young diagrams.")
    parser.add_argument("-o", "--output", default="-", help="output path (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("construct", cmd_construct, "build an (i,j)-local partition with actual rectangles")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--diagram", help="diagram file; default is the largest feasible staircase")

    p = add("feasible", cmd_feasible, "decide feasibility from the binomial threshold")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)

    p = add("oracle", cmd_oracle, "decide feasibility by exhaustive search")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--diagram", required=True)
    _add_caps(p, "nodes", "z")

    p = add("min-k", cmd_min_k, "smallest balanced budget k")
    p.add_argument("--diagram", required=True)
    p.add_argument("--method", choices=("formula", "oracle"), default="formula")
    _add_caps(p, "nodes", "z")

    p = add("steps", cmd_steps, "list the steps of a diagram")
    p.add_argument("--diagram", required=True)

    for name, func, help in (
        ("compress", cmd_compress, "map a cover of a diagram to a cover of its staircase"),
        ("expand", cmd_expand, "lift a staircase cover onto a diagram"),
    ):
        p = add(name, func, help)
        p.add_argument("--diagram", required=True)
        p.add_argument("--cover", required=True)

    p = add("graph2diagram", cmd_graph2diagram, "Young diagram of a difference graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true", help="include the vertex orderings")

    p = add("diagram2graph", cmd_diagram2graph, "difference graph of a diagram (0/1 matrix)")
    p.add_argument("--diagram", required=True)

    p = add("graph-cn", cmd_graph_cn, "local cover number of a bipartite graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("cb", "d"), required=True)
    p.add_argument("--brute", action="store_true", help="exhaustive search instead of the closed formula")
    _add_caps(p, "nodes", "graph")

    p = add("poset-split", cmd_poset_split, "split of a poset (x' -> x, x'' -> n+x)")
    p.add_argument("--poset", required=True)

    p = add("poset-graph", cmd_poset_graph, "critical-pair graph of a height-two poset")
    p.add_argument("--poset", required=True)

    p = add("ldim", cmd_ldim, "local dimension (bounds, or exact with --brute)")
    p.add_argument("--poset", required=True)
    p.add_argument("--brute", action="store_true")
    _add_caps(p, "nodes", "graph", "poset")

    p = add("ldim-bounds", cmd_ldim_bounds, "bounds on local dimension with derivation trace")
    p.add_argument("--poset", required=True)
    _add_caps(p, "nodes", "graph")

    p = add("render", cmd_render, "ASCII picture of a diagram and optional cover")
    p.add_argument("--diagram", required=True)
    p.add_argument("--cover")
    return parser


def _emit(args, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except Negative as neg:
        _emit(args, f"{neg}\n")
        return EXIT_NO
    except CapExceeded as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotADifferenceGraph, NotHeightTwo) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    except (YoungCoverError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
