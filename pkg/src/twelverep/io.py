"""Text and JSON formats.

Graph files::

    n m
    labels: p1 p2 ... pn      (optional; vertex i gets label p_i)
    x y                       (m lines, 1-based vertex numbers)

Grid files hold one ``x y`` integer pair per line. Blank lines and ``#``
comments are ignored everywhere. Model files are JSON and key vertices by
their 1-based number as a string.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .graphs import Graph, GraphError, GridGraph, LabeledGraph, Labeling, check_labeling, grid_from_points, identity_labeling
from .models import IntervalModel, ModelError, TriangleModel
from .words import Word, WordError, parse_word


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(line: str, no: int, count: int | None = None) -> list[int]:
    try:
        vals = [int(t) for t in line.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {line!r}", no) from None
    if count is not None and len(vals) != count:
        raise FormatError(f"expected {count} integers, got {len(vals)}", no)
    return vals


def parse_graph(text: str) -> LabeledGraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    no, head = lines[0]
    n, m = _ints(head, no, 2)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", no)
    body = lines[1:]
    labels: Labeling = identity_labeling(n)
    if body and body[0][1].startswith("labels:"):
        lno, lline = body.pop(0)
        try:
            labels = check_labeling(_ints(lline[len("labels:"):], lno, n), n)
        except GraphError as exc:
            raise FormatError(str(exc), lno) from None
    if len(body) != m:
        raise FormatError(f"header announces {m} edges but {len(body)} edge lines follow",
                          body[-1][0] if body else no)
    edges = []
    seen = set()
    for eno, eline in body:
        x, y = _ints(eline, eno, 2)
        if not (1 <= x <= n and 1 <= y <= n):
            raise FormatError(f"vertex out of range 1..{n}", eno)
        if x == y:
            raise FormatError("self-loop", eno)
        key = (min(x, y), max(x, y))
        if key in seen:
            raise FormatError(f"duplicate edge {x} {y}", eno)
        seen.add(key)
        edges.append((x - 1, y - 1))
    return LabeledGraph(Graph.from_edges(n, edges), labels)


def format_graph(g: Graph, labels: Sequence[int] | None = None) -> str:
    lines = [f"{g.n} {g.m}"]
    if labels is not None and tuple(labels) != identity_labeling(g.n):
        lines.append("labels: " + " ".join(map(str, labels)))
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> GridGraph:
    pts = []
    for no, line in _lines(text):
        pts.append(tuple(_ints(line, no, 2)))
    try:
        return grid_from_points(pts)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def read_word(text: str) -> Word:
    lines = _lines(text)
    if len(lines) != 1:
        raise FormatError("word file must contain exactly one line")
    no, line = lines[0]
    try:
        return parse_word(line)
    except WordError as exc:
        raise FormatError(str(exc), no) from None


def format_labeling(labels: Sequence[int]) -> str:
    return " ".join(f"{v + 1}:{x}" for v, x in enumerate(labels))


def parse_ordering(text: str, n: int) -> Labeling:
    """A space separated list of 1-based vertices, first gets label 1."""
    try:
        order = [int(t) - 1 for t in text.replace(",", " ").split()]
    except ValueError:
        raise FormatError(f"bad ordering {text!r}") from None
    if sorted(order) != list(range(n)):
        raise FormatError(f"ordering must list each of the vertices 1..{n} once")
    labels = [0] * n
    for i, v in enumerate(order, start=1):
        labels[v] = i
    return tuple(labels)


# -- models ----------------------------------------------------------------------

def _num(x: Any):
    if isinstance(x, bool):
        raise ModelError(f"bad coordinate {x!r}")
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise ModelError(f"bad coordinate {x!r}")


def _out(x) -> int | float | str:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _vertex(key: Any) -> int:
    try:
        v = int(key)
    except (TypeError, ValueError):
        raise ModelError(f"bad vertex key {key!r}") from None
    return v - 1


def model_from_json(obj: dict) -> IntervalModel | TriangleModel:
    kind = obj.get("kind")
    try:
        if kind == "interval-containment":
            intervals = {_vertex(k): (_num(a), _num(b)) for k, (a, b) in obj["intervals"].items()}
            xs = frozenset(_vertex(v) for v in obj["X"])
            ys = frozenset(_vertex(v) for v in obj["Y"])
            return IntervalModel(intervals, xs, ys)
        if kind == "simple-triangle":
            apex = {_vertex(k): _num(p) for k, p in obj["apex"].items()}
            base = {_vertex(k): (_num(a), _num(b)) for k, (a, b) in obj["base"].items()}
            return TriangleModel(apex, base)
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed {kind} model: {exc}") from None
    raise ModelError(f"unknown model kind {kind!r}")


def model_to_json(m: IntervalModel | TriangleModel) -> dict:
    if isinstance(m, IntervalModel):
        return {
            "kind": "interval-containment",
            "X": [v + 1 for v in sorted(m.xs)],
            "Y": [v + 1 for v in sorted(m.ys)],
            "intervals": {str(v + 1): [_out(a), _out(b)] for v, (a, b) in sorted(m.intervals.items())},
        }
    return {
        "kind": "simple-triangle",
        "apex": {str(v + 1): _out(p) for v, p in sorted(m.apex.items())},
        "base": {str(v + 1): [_out(a), _out(b)] for v, (a, b) in sorted(m.base.items())},
    }


def load_model(text: str) -> IntervalModel | TriangleModel:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise FormatError("model JSON must be an object")
    return model_from_json(obj)


def dump_model(m: IntervalModel | TriangleModel) -> str:
    return json.dumps(model_to_json(m), indent=2) + "\n"
