"""Text formats for graphs, colorings and reduction instances.

Graph files hold one ``u v`` edge per line.  Lines starting with ``#`` are
comments; a few comment forms carry data:

``# vertices N``
    vertex count, for graphs whose largest id is isolated from the edge
    list (the single-vertex graph is written this way).
``# pair u v``
    a requested vertex pair (reduction inputs).
``# part clique ...`` / ``# part independent ...``
    split partition of a reduction instance.

Coloring files hold ``u v c`` lines in ascending edge order.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional, Union

from .coloring import EdgeColoring
from .graph import Edge, Graph, GraphError, canonical_edge

PathLike = Union[str, Path]


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers, got {line.strip()!r}") from None


def parse_graph_with_pairs(text: str) -> tuple[Graph, list[Edge]]:
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    pairs: list[Edge] = []
    declared_n: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if words[:1] == ["vertices"]:
                (declared_n,) = _ints(" ".join(words[1:]), 1, lineno)
            elif words[:1] == ["pair"]:
                u, v = _ints(" ".join(words[1:]), 2, lineno)
                pairs.append(canonical_edge(u, v))
            continue
        u, v = _ints(line, 2, lineno)
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e} (first on line {seen[e]})")
        seen[e] = lineno
        edges.append(e)
    n = 1 + max((v for e in edges for v in e), default=-1)
    if declared_n is not None:
        if declared_n < n:
            raise GraphError(f"declared {declared_n} vertices but edges use id {n - 1}")
        n = declared_n
    if n == 0:
        raise GraphError("empty graph")
    return Graph(n, edges), pairs


def parse_graph(text: str) -> Graph:
    return parse_graph_with_pairs(text)[0]


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(g: Graph, pairs: Iterable[Edge] = (), extra_comments: Iterable[str] = ()) -> str:
    lines = []
    if g.m == 0:
        lines.append(f"# vertices {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    lines.extend(f"# pair {u} {v}" for u, v in pairs)
    lines.extend(f"# {c}" for c in extra_comments)
    return "\n".join(lines) + "\n"


def write_graph(path: PathLike, g: Graph) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def parse_coloring(text: str, g: Optional[Graph] = None) -> EdgeColoring:
    colors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        u, v, c = _ints(line, 3, lineno)
        if c < 0:
            raise GraphError(f"line {lineno}: negative color {c}")
        e = canonical_edge(u, v)
        if e in colors:
            raise GraphError(f"line {lineno}: edge {e} colored twice")
        if g is not None and not (max(e) < g.n and g.has_edge(*e)):
            raise GraphError(f"line {lineno}: edge {e} is not in the graph")
        colors[e] = c
    coloring = EdgeColoring(colors)
    if g is not None:
        coloring.as_list(g)
    return coloring


def read_coloring(path: PathLike, g: Optional[Graph] = None) -> EdgeColoring:
    return parse_coloring(Path(path).read_text(encoding="utf-8"), g)


def format_coloring(c: EdgeColoring) -> str:
    return "".join(f"{u} {v} {k}\n" for (u, v), k in c.items())


def write_coloring(path: PathLike, c: EdgeColoring) -> None:
    Path(path).write_text(format_coloring(c), encoding="utf-8")
