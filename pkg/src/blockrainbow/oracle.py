"""Brute-force ground truth for desk-scale instances.

Verifiers decide whether a given coloring is (strong) rainbow connected;
the exact solvers search colorings in canonical form (each new color first
appears in edge order), which removes color permutations from the search.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .coloring import EdgeColoring
from .graph import Edge, Graph, GraphError, bfs_distances, canonical_edge

MAX_RAINBOW_COLORS = 24
MAX_EXACT_EDGES = 20
MAX_STAR_LEAVES = 12

PairSet = list[Edge]


class SearchLimitError(GraphError):
    """Instance exceeds an exhaustive-search guard."""


def _color_bits(g: Graph, c: EdgeColoring) -> tuple[list[int], int]:
    raw = c.as_list(g)
    dense = {col: i for i, col in enumerate(sorted(set(raw)))}
    return [1 << dense[col] for col in raw], len(dense)


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    """Every pair joined by a path with pairwise distinct edge colors.

    Search over ``(vertex, used colors)`` states from each source.
    """
    bits, k = _color_bits(g, c)
    if k > MAX_RAINBOW_COLORS:
        raise SearchLimitError("too many colors for exact search")
    n = g.n
    inc = g.incidence
    for s in range(n):
        reached = [False] * n
        reached[s] = True
        left = n - 1
        seen = {(s, 0)}
        stack = [(s, 0)]
        while stack and left:
            v, used = stack.pop()
            for w, eid in inc[v]:
                b = bits[eid]
                if used & b:
                    continue
                state = (w, used | b)
                if state in seen:
                    continue
                seen.add(state)
                if not reached[w]:
                    reached[w] = True
                    left -= 1
                stack.append(state)
        if left:
            return False
    return True


def is_strong_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    """Every pair joined by a shortest path with pairwise distinct colors.

    Color sets of rainbow geodesics are pushed along the BFS layering from
    each source; on geodetic graphs each vertex holds a single set.
    """
    bits, _ = _color_bits(g, c)
    n = g.n
    inc = g.incidence
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        masks: list[Optional[set[int]]] = [None] * n
        masks[s] = {0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            mv = masks[v]
            if not mv:
                return False
            d = dist[v] + 1
            for w, eid in inc[v]:
                dw = dist[w]
                if dw < 0:
                    dist[w] = d
                    masks[w] = set()
                    queue.append(w)
                elif dw != d:
                    continue
                b = bits[eid]
                mw = masks[w]
                for mk in mv:
                    if not mk & b:
                        mw.add(mk | b)
    return True


# ---------------------------------------------------------------------------
# exact search


def all_geodesics(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    """Every shortest ``s``-``t`` path as a tuple of edge indices."""
    dist_t = bfs_distances(g, t)
    out: list[tuple[int, ...]] = []
    inc = g.incidence

    def walk(v: int, acc: list[int]) -> None:
        if v == t:
            out.append(tuple(acc))
            return
        for w, eid in inc[v]:
            if dist_t[w] == dist_t[v] - 1:
                acc.append(eid)
                walk(w, acc)
                acc.pop()

    walk(s, [])
    return out


def short_paths(g: Graph, s: int, t: int, max_len: int) -> list[tuple[int, ...]]:
    """Every simple ``s``-``t`` path with at most ``max_len`` edges."""
    dist_t = bfs_distances(g, t)
    out: list[tuple[int, ...]] = []
    inc = g.incidence
    on_path = [False] * g.n

    def walk(v: int, acc: list[int]) -> None:
        if v == t:
            out.append(tuple(acc))
            return
        on_path[v] = True
        budget = max_len - len(acc) - 1
        for w, eid in inc[v]:
            if not on_path[w] and dist_t[w] <= budget:
                acc.append(eid)
                walk(w, acc)
                acc.pop()
        on_path[v] = False

    walk(s, [])
    return out


def _search(m: int, k: int, demands: Sequence[Sequence[tuple[int, ...]]]) -> Optional[list[int]]:
    """Find a coloring of ``m`` edges with ``k`` colors such that every demand
    (a list of candidate paths) keeps at least one path with distinct colors.

    Backtracking over canonical colorings; a path dies as soon as two of its
    colored edges share a color, and a branch is cut when a demand loses its
    last live path.
    """
    if any(len(paths) == 0 for paths in demands):
        return None
    paths: list[tuple[int, ...]] = []
    owner: list[int] = []
    for d, ps in enumerate(demands):
        for p in ps:
            paths.append(p)
            owner.append(d)
    live_count = [len(ps) for ps in demands]
    alive = [True] * len(paths)

    # color edges in order of first appearance across demands, most
    # constrained demands first
    edge_order: list[int] = []
    placed = [False] * m
    for d in sorted(range(len(demands)), key=lambda d: len(demands[d])):
        for p in demands[d]:
            for e in p:
                if not placed[e]:
                    placed[e] = True
                    edge_order.append(e)
    edge_order.extend(e for e in range(m) if not placed[e])

    through: list[list[int]] = [[] for _ in range(m)]
    for pi, p in enumerate(paths):
        if len(p) > 1:
            for e in p:
                through[e].append(pi)
    color = [-1] * m

    def assign(e: int, c: int) -> Optional[list[int]]:
        killed: list[int] = []
        for pi in through[e]:
            if not alive[pi]:
                continue
            for f in paths[pi]:
                if f != e and color[f] == c:
                    alive[pi] = False
                    killed.append(pi)
                    d = owner[pi]
                    live_count[d] -= 1
                    if live_count[d] == 0:
                        color[e] = c
                        return killed + [-1]
                    break
        color[e] = c
        return killed

    def undo(e: int, killed: list[int]) -> None:
        color[e] = -1
        for pi in killed:
            if pi < 0:
                continue
            alive[pi] = True
            live_count[owner[pi]] += 1

    def rec(pos: int, used: int) -> bool:
        if pos == m:
            return True
        e = edge_order[pos]
        for c in range(min(used + 1, k)):
            killed = assign(e, c)
            ok = not (killed and killed[-1] == -1)
            if ok and rec(pos + 1, max(used, c + 1)):
                return True
            undo(e, killed)
        return False

    if rec(0, 0):
        return color
    return None


def _check_exact_input(g: Graph, cap: int) -> None:
    if g.m > MAX_EXACT_EDGES:
        raise SearchLimitError(f"exact search limited to {MAX_EXACT_EDGES} edges, graph has {g.m}")
    if cap < 0:
        raise GraphError("cap must be non-negative")


def _pairs_with_distance(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        out.extend((s, t, dist[t]) for t in range(s + 1, g.n))
    return out


def exact_src_coloring(g: Graph, cap: int) -> tuple[int, Optional[EdgeColoring]]:
    _check_exact_input(g, cap)
    if g.m == 0:
        return 0, EdgeColoring({})
    pairs = _pairs_with_distance(g)
    diameter = max(d for _, _, d in pairs)
    demands = [all_geodesics(g, s, t) for s, t, d in pairs if d > 1]
    for k in range(max(diameter, 1), cap + 1):
        found = _search(g.m, k, demands)
        if found is not None:
            coloring = EdgeColoring.from_list(g, found)
            assert is_strong_rainbow_connected(g, coloring)
            return k, coloring
    return cap + 1, None


def exact_src(g: Graph, cap: Optional[int] = None) -> int:
    """Smallest ``k <= cap`` admitting a strong rainbow coloring, else ``cap + 1``."""
    return exact_src_coloring(g, g.m if cap is None else cap)[0]


def exact_rc_coloring(g: Graph, cap: int) -> tuple[int, Optional[EdgeColoring]]:
    _check_exact_input(g, cap)
    if g.m == 0:
        return 0, EdgeColoring({})
    pairs = _pairs_with_distance(g)
    diameter = max(d for _, _, d in pairs)
    far = [(s, t) for s, t, d in pairs if d > 1]
    for k in range(max(diameter, 1), cap + 1):
        demands = [short_paths(g, s, t, k) for s, t in far]
        found = _search(g.m, k, demands)
        if found is not None:
            coloring = EdgeColoring.from_list(g, found)
            assert is_rainbow_connected(g, coloring)
            return k, coloring
    return cap + 1, None


def exact_rc(g: Graph, cap: Optional[int] = None) -> int:
    """Smallest ``k <= cap`` admitting a rainbow coloring, else ``cap + 1``."""
    return exact_rc_coloring(g, g.m if cap is None else cap)[0]


# ---------------------------------------------------------------------------
# subset strong rainbow connectivity on stars


def star_center(star: Graph) -> int:
    """Center of a star; vertex 0 for the single edge."""
    if star.n < 2 or star.m != star.n - 1:
        raise GraphError("not a star")
    if star.n == 2:
        return 0
    for v in range(star.n):
        if star.degree(v) == star.n - 1:
            return v
    raise GraphError("not a star")


def normalize_leaf_pairs(star: Graph, center: int, pairs: Iterable[Edge]) -> PairSet:
    out: list[Edge] = []
    seen = set()
    for u, v in pairs:
        e = canonical_edge(u, v)
        if u == v or not (0 <= u < star.n and 0 <= v < star.n) or center in e:
            raise GraphError(f"pair {e} is not a pair of leaves")
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def subset_src_coloring(star: Graph, pairs: Iterable[Edge], k: int) -> Optional[EdgeColoring]:
    """A ``k``-coloring of the star's edges giving every pair a rainbow path, or None.

    A leaf pair's only path runs through the center, so it is rainbow iff
    the two leaf edges differ: this is ``k``-coloring the graph the pairs
    form on the leaves.
    """
    center = star_center(star)
    if k < 1:
        raise GraphError("k must be at least 1")
    leaves = [v for v in range(star.n) if v != center]
    if len(leaves) > MAX_STAR_LEAVES:
        raise SearchLimitError(f"star search limited to {MAX_STAR_LEAVES} leaves")
    p = normalize_leaf_pairs(star, center, pairs)
    conflict: dict[int, set[int]] = {v: set() for v in leaves}
    for u, v in p:
        conflict[u].add(v)
        conflict[v].add(u)
    col: dict[int, int] = {}

    def rec(i: int, used: int) -> bool:
        if i == len(leaves):
            return True
        v = leaves[i]
        for c in range(min(used + 1, k)):
            if all(col.get(w) != c for w in conflict[v]):
                col[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                del col[v]
        return False

    if not rec(0, 0):
        return None
    return EdgeColoring({canonical_edge(center, v): col[v] for v in leaves})


def subset_src_decide(star: Graph, pairs: Iterable[Edge], k: int) -> bool:
    return subset_src_coloring(star, pairs, k) is not None


def naive_strong_check(g: Graph, c: EdgeColoring) -> bool:
    """Reference strong check enumerating every geodesic of every pair."""
    colors = c.as_list(g)
    for s, t in combinations(range(g.n), 2):
        if not any(len({colors[e] for e in p}) == len(p) for p in all_geodesics(g, s, t)):
            return False
    return True
