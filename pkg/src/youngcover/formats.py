"""Diagram and cover text formats."""
from __future__ import annotations

import json

from .diagram import Cover, YoungDiagram, is_partition, locality, make_diagram
from .errors import ParseError


def parse_diagram(text: str) -> YoungDiagram:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) != 1:
        raise ParseError("a diagram file holds exactly one line of row lengths")
    try:
        lengths = [int(tok) for tok in lines[0].split()]
    except ValueError:
        raise ParseError(f"row lengths must be integers: {lines[0]!r}") from None
    if not lengths:
        raise ParseError("empty diagram")
    return make_diagram(lengths)


def format_diagram(Y: YoungDiagram) -> str:
    return str(Y) + "\n"


def parse_cover(text: str) -> Cover:
    """Accepts a bare list of ``{"rows", "cols"}`` objects or a document with a ``cover`` key."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"cover is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("cover")
    if not isinstance(data, list):
        raise ParseError("expected a list of rectangles")
    try:
        return Cover.from_list(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad rectangle entry: {exc}") from None


def cover_document(Y: YoungDiagram, C: Cover, **meta) -> dict:
    prof = locality(Y, C)
    doc = {"diagram": list(Y.row_lengths), "z": Y.z}
    doc.update(meta)
    doc["locality"] = {"max_row": prof.max_row, "max_col": prof.max_col}
    doc["partition"] = is_partition(Y, C)
    doc["actual"] = C.all_actual
    doc["cover"] = C.to_list()
    return doc


def _value(v) -> str:
    if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
        return "[\n" + ",\n".join(f"    {json.dumps(x)}" for x in v) + "\n  ]"
    return json.dumps(v)


def dumps(doc: dict) -> str:
    """One top-level key per line, lists of objects one object per line."""
    body = ",\n".join(f"  {json.dumps(k)}: {_value(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"
