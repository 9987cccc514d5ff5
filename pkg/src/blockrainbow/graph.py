"""Simple connected graphs, recognition predicates, distances and blocks.

Vertices are dense ids ``0..n-1`` and every edge is stored canonically as
``(min, max)``.  Graphs are immutable and always connected; all other
modules rely on that.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "NotChordalError",
    "NotBlockGraphError",
    "BlockDecomposition",
    "DistanceProfile",
    "RecognitionReport",
    "canonical_edge",
    "block_decomposition",
    "recognize",
    "distance_profile",
    "bfs_distances",
    "is_geodetic",
    "is_block_graph",
    "mcs_order",
    "is_perfect_elimination_order",
    "split_partition",
]


class GraphError(ValueError):
    """Invalid graph input, or a graph outside an operation's domain."""


class NotChordalError(GraphError):
    def __init__(self, message: str = "graph not chordal"):
        super().__init__(message)


class NotBlockGraphError(GraphError):
    def __init__(self, message: str = "not a block graph"):
        super().__init__(message)


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple, connected, undirected graph on ``0..n-1``.

    >>> g = Graph(3, [(1, 0), (1, 2)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> g.adjacency[1]
    (0, 2)
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_edge_index", "_incidence", "_adjsets")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        seen: set[Edge] = set()
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        self._n = n
        self._edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        # sorted edge order already yields sorted neighbor lists
        for i, (u, v) in enumerate(self._edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append((v, i))
            inc[v].append((u, i))
        self._adjacency = tuple(tuple(a) for a in adj)
        self._incidence = tuple(tuple(a) for a in inc)
        self._edge_index: Optional[dict[Edge, int]] = None
        self._adjsets: Optional[tuple[frozenset[int], ...]] = None
        if not _connected(self._adjacency):
            raise GraphError("graph not connected")

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adjacency

    @property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, sorted ``(neighbor, edge_index)`` pairs."""
        return self._incidence

    @property
    def edge_index(self) -> dict[Edge, int]:
        if self._edge_index is None:
            self._edge_index = {e: i for i, e in enumerate(self._edges)}
        return self._edge_index

    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(a) for a in self._adjacency)
        return self._adjsets

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def min_degree(self) -> int:
        return min(len(a) for a in self._adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def _connected(adj: Sequence[Sequence[int]]) -> bool:
    n = len(adj)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_of_edge: dict[Edge, int]

    def blocks_of_vertex(self) -> list[list[int]]:
        """Per vertex, indices of the blocks containing it."""
        n = 1 + max((max(b) for b in self.blocks), default=0)
        out: list[list[int]] = [[] for _ in range(n)]
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v].append(i)
        return out

    def block_edge_counts(self) -> list[int]:
        counts = [0] * len(self.blocks)
        for i in self.block_of_edge.values():
            counts[i] += 1
        return counts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (maximal biconnected components) and cut vertices of ``g``.

    Iterative Hopcroft-Tarjan with an edge stack.  Blocks are returned as
    sorted vertex tuples ordered lexicographically, so the block with the
    smallest vertex comes first.
    """
    n = g.n
    inc = g.incidence
    edges = g.edges
    disc = [-1] * n
    low = [0] * n
    raw_blocks: list[tuple[int, ...]] = []
    edge_block = [0] * g.m
    cut: set[int] = set()
    edge_stack: list[int] = []
    timer = 0
    if g.m == 0:
        return BlockDecomposition((), frozenset(), {})

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent edge index, iterator position)
    stack = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        v, pe, i = frame
        nbrs = inc[v]
        if i < len(nbrs):
            frame[2] = i + 1
            w, eid = nbrs[i]
            if eid == pe:
                continue
            if disc[w] == -1:
                edge_stack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append([w, eid, 0])
            elif disc[w] < disc[v]:
                edge_stack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
            continue
        stack.pop()
        if not stack:
            break
        u = stack[-1][0]
        if low[v] < low[u]:
            low[u] = low[v]
        if low[v] >= disc[u]:
            if u != root:
                cut.add(u)
            comp: set[int] = set()
            bid = len(raw_blocks)
            while True:
                eid = edge_stack.pop()
                edge_block[eid] = bid
                a, b = edges[eid]
                comp.add(a)
                comp.add(b)
                if eid == pe:
                    break
            raw_blocks.append(tuple(sorted(comp)))
    if root_children > 1:
        cut.add(root)

    ranked = sorted(range(len(raw_blocks)), key=raw_blocks.__getitem__)
    remap = [0] * len(raw_blocks)
    for new_id, old_id in enumerate(ranked):
        remap[old_id] = new_id
    blocks = tuple(raw_blocks[i] for i in ranked)
    block_of_edge = {e: remap[edge_block[i]] for i, e in enumerate(edges)}
    return BlockDecomposition(blocks, frozenset(cut), block_of_edge)


def is_block_graph(g: Graph, blocks: Optional[BlockDecomposition] = None) -> bool:
    bd = blocks if blocks is not None else block_decomposition(g)
    counts = bd.block_edge_counts()
    return all(c == len(b) * (len(b) - 1) // 2 for b, c in zip(bd.blocks, counts))


# ---------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistanceProfile:
    distances: tuple[tuple[int, ...], ...]
    eccentricities: tuple[int, ...]
    diameter: int
    radius: int
    centers: frozenset[int]

    def peripheral(self) -> frozenset[int]:
        return frozenset(v for v, e in enumerate(self.eccentricities) if e == self.diameter)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return dist


def distance_profile(g: Graph) -> DistanceProfile:
    rows = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    ecc = tuple(max(r) for r in rows)
    diameter = max(ecc)
    radius = min(ecc)
    centers = frozenset(v for v, e in enumerate(ecc) if e == radius)
    return DistanceProfile(rows, ecc, diameter, radius, centers)


def is_geodetic(g: Graph) -> bool:
    """True iff every pair of vertices is joined by exactly one shortest path.

    Shortest paths from each source are counted over the BFS layering,
    saturating at 2.
    """
    adj = g.adjacency
    n = g.n
    for s in range(n):
        dist = [-1] * n
        count = [0] * n
        dist[s] = 0
        count[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            d = dist[v] + 1
            cv = count[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = d
                    count[w] = cv
                    queue.append(w)
                elif dist[w] == d:
                    count[w] = 2 if count[w] + cv > 1 else 1
        if any(c > 1 for c in count):
            return False
    return True


# ---------------------------------------------------------------------------
# recognition


def mcs_order(g: Graph, permutation: Optional[Sequence[int]] = None) -> list[int]:
    """Maximum-cardinality search visit order.

    The first vertex is the first entry of ``permutation`` (default: vertex
    0).  Among vertices of equal weight the most recently promoted one is
    chosen; untouched vertices are taken in ``permutation`` order.  Runs in
    linear time using weight buckets with lazy deletion.
    """
    n = g.n
    if permutation is None:
        priority: Sequence[int] = range(n)
    else:
        priority = list(permutation)
        if sorted(priority) != list(range(n)):
            raise GraphError("permutation must list every vertex exactly once")
    adj = g.adjacency
    weight = [0] * n
    numbered = [False] * n
    # buckets grow on demand; weights never exceed the largest degree
    buckets: list[list[int]] = [list(reversed(priority))]
    order: list[int] = []
    j = 0
    for _ in range(n):
        while True:
            b = buckets[j]
            while b and (numbered[b[-1]] or weight[b[-1]] != j):
                b.pop()
            if b:
                break
            j -= 1
        v = b.pop()
        numbered[v] = True
        order.append(v)
        j += 1
        if j == len(buckets):
            buckets.append([])
        for w in adj[v]:
            if not numbered[w]:
                x = weight[w] + 1
                weight[w] = x
                if x == len(buckets):
                    buckets.append([])
                buckets[x].append(w)
    return order


def is_perfect_elimination_order(g: Graph, visit_order: Sequence[int]) -> bool:
    """Check that the reverse of ``visit_order`` is a perfect elimination ordering.

    For every vertex, its earlier-visited neighbors minus the most recent one
    must all be adjacent to that most recent one.
    """
    pos = [0] * g.n
    for i, v in enumerate(visit_order):
        pos[v] = i
    adj = g.adjacency
    nsets = g.neighbor_sets()
    for i, v in enumerate(visit_order):
        earlier = [w for w in adj[v] if pos[w] < i]
        if len(earlier) < 2:
            continue
        p = max(earlier, key=pos.__getitem__)
        ps = nsets[p]
        for w in earlier:
            if w != p and w not in ps:
                return False
    return True


def split_partition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Clique/independent-set partition if ``g`` is split, else None.

    Degree-sequence test of Hammer and Simeone.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    k = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            k = i
    if sum(deg[:k]) != k * (k - 1) + sum(deg[k:]):
        return None
    return frozenset(order[:k]), frozenset(order[k:])


@dataclass(frozen=True)
class RecognitionReport:
    is_chordal: bool
    peo: Optional[tuple[int, ...]]
    is_block_graph: bool
    is_split: bool
    split_partition: Optional[tuple[frozenset[int], frozenset[int]]]
    is_bridgeless: bool
    bridge_edges: tuple[Edge, ...]


def recognize(g: Graph) -> RecognitionReport:
    order = mcs_order(g)
    chordal = is_perfect_elimination_order(g, order)
    bd = block_decomposition(g)
    counts = bd.block_edge_counts()
    bridges = tuple(sorted(bd.blocks[i] for i, c in enumerate(counts) if c == 1))
    part = split_partition(g)
    return RecognitionReport(
        is_chordal=chordal,
        peo=tuple(reversed(order)) if chordal else None,
        is_block_graph=is_block_graph(g, bd),
        is_split=part is not None,
        split_partition=part,
        is_bridgeless=not bridges,
        bridge_edges=bridges,  # type: ignore[arg-type]
    )
