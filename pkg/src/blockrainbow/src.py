"""Exact strong rainbow connection number and optimal coloring of block graphs.

Every clique-tree node of labeled degree below three gets its own color, and
that count is optimal.  Blocks of labeled degree three or more reuse three
colors found on three different sides of the block.
"""

from __future__ import annotations

from itertools import combinations

from .chordal import CliqueTree, build_clique_tree, labeled_degrees
from .coloring import EdgeColoring
from .graph import Edge, Graph, NotBlockGraphError, is_block_graph

RepresentativeTable = dict[tuple[int, int], int]


def _block_clique_tree(g: Graph) -> CliqueTree:
    if not is_block_graph(g):
        raise NotBlockGraphError()
    return build_clique_tree(g)


def component_representatives(t: CliqueTree) -> RepresentativeTable:
    """For each node ``c`` and tree neighbor ``d``, the smallest-id node of
    labeled degree < 3 in the component of ``T - c`` that contains ``d``.

    Two passes over the tree rooted at node 0: the downward pass finds the
    best node inside each subtree, the upward pass the best node outside it.
    Such a node always exists, since every component holds a leaf of ``T``
    and leaves have labeled degree 1.
    """
    q = len(t.nodes)
    if q <= 1:
        return {}
    low = [d < 3 for d in labeled_degrees(t)]
    nbrs = [[j for j, _ in lst] for lst in t.neighbors]
    none = q  # sentinel larger than every node id

    parent = [-1] * q
    order = [0]
    parent[0] = 0
    for x in order:
        for y in nbrs[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    parent[0] = -1

    down = [none] * q
    for x in reversed(order):
        best = x if low[x] else none
        for y in nbrs[x]:
            if y != parent[x] and down[y] < best:
                best = down[y]
        down[x] = best

    up = [none] * q  # best node outside subtree(x)
    for x in order:
        children = [y for y in nbrs[x] if y != parent[x]]
        # best over everything reachable from x except one child's subtree
        base = x if low[x] else none
        if parent[x] >= 0 and up[x] < base:
            base = up[x]
        first = second = none
        for y in children:
            v = down[y]
            if v < first:
                first, second = v, first
            elif v < second:
                second = v
        for y in children:
            other = second if down[y] == first else first
            up[y] = min(base, other)

    table: RepresentativeTable = {}
    for x in range(q):
        for y in nbrs[x]:
            rep = up[x] if y == parent[x] else down[y]
            assert rep != none
            table[(x, y)] = rep
    return table


def src_number(g: Graph) -> int:
    """Strong rainbow connection number of a connected block graph."""
    t = _block_clique_tree(g)
    if g.m == 0:
        return 0
    return sum(1 for d in labeled_degrees(t) if d < 3)


def _block_edges(clique: tuple[int, ...]) -> list[Edge]:
    return list(combinations(clique, 2))


def strong_rainbow_color(g: Graph) -> EdgeColoring:
    """Strong rainbow coloring of a block graph with ``src_number(g)`` colors."""
    t = _block_clique_tree(g)
    if g.m == 0:
        return EdgeColoring({})
    ldeg = labeled_degrees(t)
    colors: dict[Edge, int] = {}
    node_color: dict[int, int] = {}
    for i, clique in enumerate(t.nodes):
        if ldeg[i] < 3:
            c = node_color[i] = len(node_color)
            for e in _block_edges(clique):
                colors[e] = c
    if len(node_color) < len(t.nodes):
        reps = component_representatives(t)
        nbrs = t.neighbors
        for j, clique in enumerate(t.nodes):
            if ldeg[j] < 3:
                continue
            # three smallest distinct separator vertices, smallest neighbor per label
            first_nbr: dict[int, int] = {}
            for y, (x,) in nbrs[j]:
                if x not in first_nbr or y < first_nbr[x]:
                    first_nbr[x] = y
            x1, x2, x3 = sorted(first_nbr)[:3]
            c1, c2, c3 = (node_color[reps[(j, first_nbr[x])]] for x in (x1, x2, x3))
            hub = (x1, x2) if x1 < x2 else (x2, x1)
            for e in _block_edges(clique):
                if x1 not in e:
                    colors[e] = c1
                elif e == hub:
                    colors[e] = c3
                else:
                    colors[e] = c2
    return EdgeColoring(colors)


def lower_bound_edges(g: Graph) -> list[Edge]:
    """One edge per clique-tree node of labeled degree < 3, which any strong
    rainbow coloring must color pairwise differently.

    Degree-1 nodes contribute an edge at their separator, degree-2 nodes the
    edge joining their two separators, and a lone clique any edge.
    """
    t = _block_clique_tree(g)
    if g.m == 0:
        return []
    ldeg = labeled_degrees(t)
    nbrs = t.neighbors
    picked = []
    for i, clique in enumerate(t.nodes):
        if ldeg[i] >= 3:
            continue
        seps = sorted({lab[0] for _, lab in nbrs[i]})
        if len(seps) == 0:
            picked.append((clique[0], clique[1]))
        elif len(seps) == 1:
            s = seps[0]
            other = next(v for v in clique if v != s)
            picked.append((min(s, other), max(s, other)))
        else:
            picked.append((seps[0], seps[1]))
    return picked
