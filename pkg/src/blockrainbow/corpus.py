"""Deterministic graph families, random block graphs and a small exhaustive corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Edge, Graph, GraphError, block_decomposition

FAMILIES = {
    # name: number of integer parameters
    "path": 1,
    "star": 1,
    "clique": 1,
    "windmill": 2,
    "kn_triangles": 1,
    "triangle_chain": 1,
    "bowtie": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        if len(self.params) != FAMILIES[self.family]:
            raise GraphError(
                f"family {self.family} takes {FAMILIES[self.family]} parameter(s), got {len(self.params)}"
            )


def _clique(vertices: list[int]) -> list[Edge]:
    return list(combinations(vertices, 2))


def generate(spec: FamilySpec) -> Graph:
    """Build a named family member.  Hub or core vertices get the smallest ids.

    >>> generate(FamilySpec("windmill", (3, 4))).m
    18
    """
    f, p = spec.family, spec.params
    if f == "path":
        (n,) = p
        if n < 1:
            raise GraphError("path needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if f == "star":
        (n,) = p
        if n < 1:
            raise GraphError("star needs n >= 1 leaves")
        return Graph(n + 1, [(0, i) for i in range(1, n + 1)])
    if f == "clique":
        (n,) = p
        if n < 1:
            raise GraphError("clique needs n >= 1")
        return Graph(n, _clique(list(range(n))))
    if f == "windmill":
        copies, size = p
        if copies < 2 or size < 2:
            raise GraphError("windmill needs m >= 2 copies of K_n with n >= 2")
        edges = []
        nxt = 1
        for _ in range(copies):
            edges += _clique([0] + list(range(nxt, nxt + size - 1)))
            nxt += size - 1
        return Graph(nxt, edges)
    if f == "kn_triangles":
        (n,) = p
        if n < 1:
            raise GraphError("kn_triangles needs n >= 1")
        edges = _clique(list(range(n)))
        for i in range(n):
            a, b = n + 2 * i, n + 2 * i + 1
            edges += [(i, a), (i, b), (a, b)]
        return Graph(3 * n, edges)
    if f == "triangle_chain":
        (t,) = p
        if t < 1:
            raise GraphError("triangle_chain needs t >= 1")
        edges = []
        for i in range(t):
            edges += _clique([2 * i, 2 * i + 1, 2 * i + 2])
        return Graph(2 * t + 1, edges)
    # bowtie
    return Graph(5, _clique([0, 1, 2]) + _clique([2, 3, 4]))


def random_block_graph(
    seed: int, block_count: int, max_block_size: int, bridgeless: bool = False
) -> Graph:
    """Glue ``block_count`` random cliques together, each at a uniformly
    chosen existing vertex.  Sizes are uniform in ``[2 or 3, max_block_size]``.
    """
    if block_count < 1:
        raise GraphError("block_count must be at least 1")
    low = 3 if bridgeless else 2
    if max_block_size < low:
        raise GraphError(f"max_block_size must be at least {low}")
    rng = random.Random(seed)
    size = rng.randint(low, max_block_size)
    n = size
    edges = _clique(list(range(size)))
    for _ in range(block_count - 1):
        at = rng.randrange(n)
        size = rng.randint(low, max_block_size)
        new = list(range(n, n + size - 1))
        edges += _clique([at] + new)
        n += size - 1
    return Graph(n, edges)


def sample_block_graphs(
    seed: int,
    count: int,
    *,
    max_blocks: int = 40,
    max_block_size: int = 5,
    max_vertices: Optional[int] = None,
    max_edges: Optional[int] = None,
    bridgeless: bool = False,
) -> list[Graph]:
    """``count`` random block graphs within the given size limits.

    Block count and block size cap are drawn per graph; draws exceeding
    the limits are rejected.  Deterministic in ``seed``.
    """
    rng = random.Random(seed)
    low = 3 if bridgeless else 2
    out: list[Graph] = []
    while len(out) < count:
        g = random_block_graph(
            rng.getrandbits(32),
            rng.randint(1, max_blocks),
            rng.randint(low, max(low, max_block_size)),
            bridgeless,
        )
        if max_vertices is not None and g.n > max_vertices:
            continue
        if max_edges is not None and g.m > max_edges:
            continue
        out.append(g)
    return out


# ---------------------------------------------------------------------------
# exhaustive small corpus


def block_graph_signature(g: Graph) -> str:
    """Canonical form of a block graph, exact up to isomorphism.

    A block graph is determined by its block-cut tree with block sizes, so
    the tree is canonized by rooted encodings taken from its center(s).
    """
    bd = block_decomposition(g)
    if not bd.blocks:
        return "K1"
    cuts = sorted(bd.cut_vertices)
    cut_id = {v: len(bd.blocks) + i for i, v in enumerate(cuts)}
    size = len(bd.blocks) + len(cuts)
    tree: list[list[int]] = [[] for _ in range(size)]
    label = [f"B{len(b)}" for b in bd.blocks] + ["C"] * len(cuts)
    for i, b in enumerate(bd.blocks):
        for v in b:
            if v in cut_id:
                tree[i].append(cut_id[v])
                tree[cut_id[v]].append(i)

    degree = [len(a) for a in tree]
    layer = [x for x in range(size) if degree[x] <= 1]
    remaining = size
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for x in layer:
            for y in tree[x]:
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
        layer = nxt
    centers = layer

    def encode(root: int) -> str:
        # iterative post-order so deep chains do not hit the recursion limit
        enc: dict[int, str] = {}
        stack = [(root, -1, False)]
        while stack:
            x, parent, done = stack.pop()
            if done:
                kids = sorted(enc[y] for y in tree[x] if y != parent)
                enc[x] = label[x] + "(" + "".join(kids) + ")"
                continue
            stack.append((x, parent, True))
            stack.extend((y, x, False) for y in tree[x] if y != parent)
        return enc[root]

    return min(encode(c) for c in centers)


def enumerate_block_graphs(
    max_edges: int, min_block_size: int = 2, max_vertices: Optional[int] = None
) -> Iterator[Graph]:
    """Every connected block graph with at least one edge and at most
    ``max_edges`` edges, once per isomorphism class.

    Graphs grow by gluing a clique at one vertex; every block graph arises
    this way because removing a leaf block leaves a block graph.
    ``min_block_size=3`` restricts to bridgeless graphs.
    """
    seen: set[str] = set()
    frontier: list[Graph] = []

    def fits(n: int, m: int) -> bool:
        return m <= max_edges and (max_vertices is None or n <= max_vertices)

    size = min_block_size
    while fits(size, size * (size - 1) // 2):
        g = Graph(size, _clique(list(range(size))))
        seen.add(block_graph_signature(g))
        frontier.append(g)
        size += 1
    while frontier:
        yield from frontier
        nxt: list[Graph] = []
        for g in frontier:
            for v in range(g.n):
                size = min_block_size
                while fits(g.n + size - 1, g.m + size * (size - 1) // 2):
                    h = Graph(g.n + size - 1, g.edges + tuple(_clique([v] + list(range(g.n, g.n + size - 1)))))
                    sig = block_graph_signature(h)
                    if sig not in seen:
                        seen.add(sig)
                        nxt.append(h)
                    size += 1
        frontier = nxt
