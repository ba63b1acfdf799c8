"""Reading and writing graphs, hypergraphs and set systems.

JSON forms::

    {"n": 4, "edges": [[1, 2], [2, 3]]}
    {"n": 4, "hyperedges": [[1, 2, 3, 4], [2, 3, 4]]}
    {"n": 4, "members": [[], [1], [2]]}

Compact text form: a first line ``n m`` followed by m lines of space-separated
vertices; a line holding only ``-`` stands for the empty set.  Lines starting
with ``#`` are ignored.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .graph import Graph, complete, cycle, path, star
from .hypergraph import Hypergraph, SetSystem

SCHEMA_VERSION = 1

_NAMED = {"K": complete, "S": star, "P": path, "C": cycle}


class ParseError(ValueError):
    pass


def _rows(text: str, source: str) -> tuple[int, list[list[int]]]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError(f"{source}: empty input")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise ParseError(f"{source}: line 1: expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"{source}: expected {m} rows after the header, found {len(body)}")
    rows = []
    for i, ln in enumerate(body, start=2):
        if ln == "-":
            rows.append([])
            continue
        try:
            rows.append([int(x) for x in ln.split()])
        except ValueError:
            raise ParseError(f"{source}: row {i}: non-integer vertex in {ln!r}") from None
    return n, rows


def _load_json(text: str, source: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    return obj


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    if _is_json(text):
        obj = _load_json(text, source)
        try:
            return Graph.from_json(obj)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{source}: malformed graph object ({exc})") from None
    n, rows = _rows(text, source)
    if any(len(r) != 2 for r in rows):
        raise ParseError(f"{source}: every graph edge needs exactly two vertices")
    return Graph(n, tuple(tuple(r) for r in rows))


def parse_hypergraph(text: str, source: str = "<hypergraph>") -> Hypergraph:
    if _is_json(text):
        obj = _load_json(text, source)
        try:
            return Hypergraph.from_json(obj)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{source}: malformed hypergraph object ({exc})") from None
    n, rows = _rows(text, source)
    return Hypergraph(n, rows)


def parse_setsystem(text: str, source: str = "<set system>") -> SetSystem:
    if _is_json(text):
        obj = _load_json(text, source)
        try:
            return SetSystem.from_json(obj)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{source}: malformed set system object ({exc})") from None
    n, rows = _rows(text, source)
    return SetSystem(n, rows)


def named_graph(spec: str) -> Graph | None:
    """``K3``, ``S5``, ``P4``, ``C5`` and friends; None if ``spec`` is not a name."""
    m = re.fullmatch(r"([KSPC])(\d+)", spec.strip().upper())
    if not m:
        return None
    return _NAMED[m.group(1)](int(m.group(2)))


def load_graph(spec: str) -> Graph:
    p = Path(spec)
    if not p.exists():
        g = named_graph(spec)
        if g is None:
            raise ParseError(f"{spec}: no such file or named graph")
        return g
    return parse_graph(p.read_text(), spec)


def load_hypergraph(spec: str) -> Hypergraph:
    p = Path(spec)
    if not p.exists():
        raise ParseError(f"{spec}: no such file")
    return parse_hypergraph(p.read_text(), spec)


def _encode(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj))
        return "[\n" + ",\n".join(pad + _encode(x, depth + 1) for x in obj) + "\n" + end + "]"
    return json.dumps(obj)


def dumps(obj: dict) -> str:
    """Byte-stable JSON with a schema version; flat lists stay on one line."""
    return _encode({"schema_version": SCHEMA_VERSION, **obj}, 0) + "\n"


def to_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h)}"]
    lines += [" ".join(str(v) for v in e) for e in h.hyperedges]
    return "\n".join(lines) + "\n"
