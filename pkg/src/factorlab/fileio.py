"""The ``fgf`` text format and JSON report helpers.

Line-oriented, 1-indexed::

    c any comment
    p fgf <n> <edge-count>
    v <id> <g> <f>        (optional; if present, one per vertex)
    e <u> <v>

Edges may appear in any order and orientation on input; output lists them
sorted with ``u < v``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .errors import ParseError
from .factors import FractionalAssignment, VertexFuncs
from .graph import Graph


def _ints(parts, lineno, count, what):
    if len(parts) != count:
        raise ParseError(f"malformed {what} line: expected {count} fields", lineno)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"malformed {what} line: non-integer field", lineno)


def parse_graph_file(text: str) -> tuple[Graph, VertexFuncs | None]:
    n = declared = None
    edges: dict[tuple[int, int], int] = {}
    funcs: dict[int, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag, rest = parts[0], parts[1:]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(rest) != 3 or rest[0] != "fgf":
                raise ParseError("header must read 'p fgf <n> <edges>'", lineno)
            n, declared = _ints(rest[1:], lineno, 2, "header")
            if n < 1 or declared < 0:
                raise ParseError("header counts out of range", lineno)
            continue
        if n is None:
            raise ParseError("line before header", lineno)
        if tag == "e":
            u, v = _ints(rest, lineno, 2, "edge")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                raise ParseError(f"duplicate edge {u} {v} (first on line {edges[key]})", lineno)
            edges[key] = lineno
        elif tag == "v":
            x, lo, hi = _ints(rest, lineno, 3, "vertex")
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}", lineno)
            if x - 1 in funcs:
                raise ParseError(f"duplicate vertex line for {x}", lineno)
            if lo < 0 or hi < lo:
                raise ParseError(f"need 0 <= g <= f at vertex {x}", lineno)
            funcs[x - 1] = (lo, hi)
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing header")
    if len(edges) != declared:
        raise ParseError(f"header declares {declared} edges, found {len(edges)}")
    vf = None
    if funcs:
        missing = [x + 1 for x in range(n) if x not in funcs]
        if missing:
            raise ParseError(f"vertex lines missing for {missing}")
        vf = VertexFuncs(tuple(funcs[x][0] for x in range(n)), tuple(funcs[x][1] for x in range(n)))
    return Graph(n, edges), vf


def serialize_graph(graph: Graph, vf: VertexFuncs | None = None, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p fgf {graph.order} {graph.size}")
    if vf is not None:
        lines.extend(f"v {x + 1} {lo} {hi}" for x, (lo, hi) in enumerate(zip(vf.g, vf.f)))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def fraction_string(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def assignment_json(h: FractionalAssignment) -> list[dict]:
    return [{"edge": [u + 1, v + 1], "value": fraction_string(w)} for (u, v), w in sorted(h.values.items())]


def one_based(vs) -> list[int]:
    return [v + 1 for v in vs]


def witness_json(w) -> dict | None:
    if w is None:
        return None
    return {
        "S": one_based(w.S),
        "T": one_based(w.T),
        "U": one_based(w.U),
        "H": [one_based(e) for e in w.H],
        "slack": w.slack,
    }


def report_schema() -> dict:
    return json.loads(resources.files("factorlab").joinpath("report_schema.json").read_text())


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)
