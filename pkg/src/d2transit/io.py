"""Line-oriented instance format.

::

    # comment (also allowed after any line)
    p <n> <m>                  header, exactly once, before any edge
    v <id> <label>             optional external label for vertex <id>
    e <u> <v>                  edge; endpoints are ids or declared labels
    b X: <ids...> | Y: <ids...>  optional bipartition

Ids are 0-based. Self-loops, duplicate edges and an edge count that disagrees
with the header are errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classes import BipartiteView
from .errors import GraphError
from .graph import Graph, build_graph


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Instance:
    graph: Graph
    view: Optional[BipartiteView] = None
    labels: Optional[tuple] = None

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected integer {what}, got {tok!r}") from None


def parse_instance(text: str) -> Instance:
    n = m = None
    labels = {}
    raw_edges = []
    sides = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(rest) != 2:
                raise ParseError(lineno, "header must be 'p <n> <m>'")
            n, m = _int(rest[0], lineno, "vertex count"), _int(rest[1], lineno, "edge count")
            if n < 1 or m < 0:
                raise ParseError(lineno, "header needs n >= 1 and m >= 0")
        elif n is None:
            raise ParseError(lineno, f"{tag!r} line before the 'p' header")
        elif tag == "v":
            if len(rest) != 2:
                raise ParseError(lineno, "label line must be 'v <id> <label>'")
            vid = _int(rest[0], lineno, "vertex id")
            if not 0 <= vid < n:
                raise ParseError(lineno, f"vertex {vid} outside 0..{n - 1}")
            if rest[1] in labels.values():
                raise ParseError(lineno, f"label {rest[1]!r} used twice")
            labels[vid] = rest[1]
        elif tag == "e":
            if len(rest) != 2:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            raw_edges.append((lineno, rest[0], rest[1]))
        elif tag == "b":
            if sides is not None:
                raise ParseError(lineno, "duplicate side line")
            sides = (lineno, line[1:])
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise GraphError("missing 'p <n> <m>' header")

    by_label = {lab: vid for vid, lab in labels.items()}

    def resolve(tok, lineno):
        if tok in by_label:
            return by_label[tok]
        vid = _int(tok, lineno, "vertex id or declared label")
        if not 0 <= vid < n:
            raise ParseError(lineno, f"vertex {vid} outside 0..{n - 1}")
        return vid

    edges = []
    seen = set()
    for lineno, a, b in raw_edges:
        u, v = resolve(a, lineno), resolve(b, lineno)
        if u == v:
            raise ParseError(lineno, f"self-loop on vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    graph = build_graph(n, edges)

    view = None
    if sides is not None:
        lineno, body = sides
        view = _parse_sides(body, lineno, graph, resolve)
    label_tuple = tuple(labels.get(v, str(v)) for v in range(n)) if labels else None
    return Instance(graph, view, label_tuple)


def _parse_sides(body, lineno, graph, resolve) -> BipartiteView:
    halves = body.split("|")
    if len(halves) != 2:
        raise ParseError(lineno, "side line must be 'b X: ... | Y: ...'")
    out = []
    for half, name in zip(halves, ("X", "Y")):
        head, sep, ids = half.partition(":")
        if not sep or head.strip() != name:
            raise ParseError(lineno, f"expected '{name}:' in side line")
        out.append(frozenset(resolve(tok, lineno) for tok in ids.split()))
    try:
        return BipartiteView(graph, out[0], out[1])
    except GraphError as exc:
        raise ParseError(lineno, str(exc)) from None


def parse_edge_list(text: str):
    """Parse instance text into a :class:`Graph`, or a :class:`BipartiteView`
    when a side line is present."""
    inst = parse_instance(text)
    return inst.view if inst.view is not None else inst.graph


def format_instance(obj, labels=None, comments=()) -> str:
    """Serialise a Graph or BipartiteView; ``comments`` become leading ``#`` lines."""
    view = obj if isinstance(obj, BipartiteView) else None
    G = view.graph if view is not None else obj
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {G.n} {G.m}")
    if labels is not None:
        lines += [f"v {v} {lab}" for v, lab in enumerate(labels)]
    lines += [f"e {u} {v}" for u, v in G.edge_list()]
    if view is not None:
        xs = " ".join(map(str, sorted(view.X)))
        ys = " ".join(map(str, sorted(view.Y)))
        lines.append(f"b X: {xs} | Y: {ys}")
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    import sys

    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
