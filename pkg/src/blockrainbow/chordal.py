"""Clique trees of chordal graphs.

A clique tree has the maximal cliques of the graph as nodes; every tree edge
carries the intersection of its two cliques (a minimal separator) as a label.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, GraphError, NotChordalError, mcs_order

Clique = tuple[int, ...]
Label = tuple[int, ...]

MAX_REDUCED_CLIQUES = 32


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques (sorted vertex tuples, in lexicographic order) joined
    by labeled tree edges ``(i, j, label)`` with ``i < j``."""

    nodes: tuple[Clique, ...]
    tree_edges: tuple[tuple[int, int, Label], ...]

    @property
    def neighbors(self) -> list[list[tuple[int, Label]]]:
        """Per node, ``(neighbor, label)`` pairs sorted by neighbor id."""
        out: list[list[tuple[int, Label]]] = [[] for _ in self.nodes]
        for i, j, lab in self.tree_edges:
            out[i].append((j, lab))
            out[j].append((i, lab))
        for lst in out:
            lst.sort()
        return out

    @property
    def labeled_degree(self) -> tuple[int, ...]:
        return tuple(labeled_degrees(self))

    def index(self) -> dict[Clique, int]:
        return {c: i for i, c in enumerate(self.nodes)}


def _elimination_cliques(g: Graph, order: Sequence[int]):
    """Cliques, parent links and labels from an MCS visit order, or None if
    the reversed order is not a perfect elimination ordering.

    A new clique starts whenever a vertex has no more earlier-visited
    neighbors than its predecessor; its parent is the clique of its most
    recently visited earlier neighbor.
    """
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    adj = g.adjacency
    nsets = g.neighbor_sets()
    cliques: list[list[int]] = []
    parent: list[int] = []
    label_len: list[int] = []
    clique_of = [0] * n
    prev_card = -1
    for i, v in enumerate(order):
        earlier = [w for w in adj[v] if pos[w] < i]
        card = len(earlier)
        last = -1
        if card:
            last = max(earlier, key=pos.__getitem__)
            if card > 1:
                ls = nsets[last]
                for w in earlier:
                    if w != last and w not in ls:
                        return None
        if card <= prev_card or not cliques:
            parent.append(clique_of[last] if card else -1)
            # the label is the clique's first card vertices (already sorted)
            label_len.append(card)
            earlier.append(v)
            cliques.append(earlier)
        else:
            cliques[-1].append(v)
        clique_of[v] = len(cliques) - 1
        prev_card = card
    return cliques, parent, label_len


def build_clique_tree(g: Graph, permutation: Optional[Sequence[int]] = None) -> CliqueTree:
    """Clique tree of a connected chordal graph in linear time.

    ``permutation`` changes the search's tie-breaking (and its start vertex),
    which can produce a different but equally valid tree.
    """
    found = _elimination_cliques(g, mcs_order(g, permutation))
    if found is None:
        raise NotChordalError()
    cliques, parent, label_len = found
    labels = [tuple(c[:k]) for c, k in zip(cliques, label_len)]
    keyed = []
    for c in cliques:
        c.sort()
        keyed.append(tuple(c))
    ranked = sorted(range(len(keyed)), key=keyed.__getitem__)
    remap = [0] * len(keyed)
    for new_id, old_id in enumerate(ranked):
        remap[old_id] = new_id
    edges = []
    for child, par in enumerate(parent):
        if par < 0:
            continue
        a, b = remap[child], remap[par]
        if a > b:
            a, b = b, a
        edges.append((a, b, labels[child]))
    edges.sort()
    return CliqueTree(tuple(keyed[i] for i in ranked), tuple(edges))


def labeled_degrees(t: CliqueTree) -> list[int]:
    """Number of distinct labels on the tree edges at each node."""
    seen: list[set[Label]] = [set() for _ in t.nodes]
    for i, j, lab in t.tree_edges:
        seen[i].add(lab)
        seen[j].add(lab)
    return [len(s) for s in seen]


def check_clique_tree(g: Graph, t: CliqueTree) -> None:
    """Raise ``AssertionError`` unless ``t`` is a valid clique tree of ``g``.

    Quadratic in the number of cliques; meant for tests and diagnostics.
    """
    q = len(t.nodes)
    assert len(t.tree_edges) == q - 1, "tree must have q-1 edges"
    nbrs = t.neighbors
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y, _ in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    assert len(seen) == q, "tree edges must connect all nodes"
    sets = [frozenset(c) for c in t.nodes]
    for i, j, lab in t.tree_edges:
        assert lab and frozenset(lab) == sets[i] & sets[j], f"bad label on edge {i}-{j}"
    covered = set()
    for c in t.nodes:
        for e in combinations(c, 2):
            assert g.has_edge(*e), f"node {c} is not a clique"
            covered.add(e)
    assert covered == set(g.edges), "cliques must cover every edge"
    for i in range(q):
        for j in range(i + 1, q):
            assert not sets[i] <= sets[j] and not sets[j] <= sets[i], "cliques must be maximal"
    for i in range(q):
        # path from i to every other node via BFS parents
        par = {i: -1}
        queue = deque([i])
        while queue:
            x = queue.popleft()
            for y, _ in nbrs[x]:
                if y not in par:
                    par[y] = x
                    queue.append(y)
        for j in range(q):
            common = sets[i] & sets[j]
            x = j
            while x != -1:
                assert common <= sets[x], f"clique-intersection property fails on {i}..{j}"
                x = par[x]


@dataclass(frozen=True)
class ReducedCliqueGraph:
    nodes: tuple[Clique, ...]
    edges: tuple[tuple[int, int, Label], ...]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, j, _ in self.edges}


def _components_without(g: Graph, removed: frozenset[int]) -> list[int]:
    comp = [-1] * g.n
    adj = g.adjacency
    label = 0
    for s in range(g.n):
        if s in removed or comp[s] >= 0:
            continue
        comp[s] = label
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if comp[w] < 0 and w not in removed:
                    comp[w] = label
                    stack.append(w)
        label += 1
    return comp


def reduced_clique_graph(g: Graph) -> ReducedCliqueGraph:
    """All pairs of maximal cliques whose intersection is a minimal separator
    separating them.

    Two cliques qualify when their intersection ``S`` is non-empty and the
    rest of each lies in a different component of ``g - S``; both components
    are then full for ``S`` because each clique contains ``S``.
    """
    nodes = build_clique_tree(g).nodes
    if len(nodes) > MAX_REDUCED_CLIQUES:
        raise GraphError("reduced clique graph too large")
    sets = [frozenset(c) for c in nodes]
    edges = []
    cache: dict[frozenset[int], list[int]] = {}
    for i, j in combinations(range(len(nodes)), 2):
        s = sets[i] & sets[j]
        if not s:
            continue
        if s not in cache:
            cache[s] = _components_without(g, s)
        comp = cache[s]
        a = next(iter(sets[i] - s))
        b = next(iter(sets[j] - s))
        if comp[a] != comp[b]:
            edges.append((i, j, tuple(sorted(s))))
    return ReducedCliqueGraph(nodes, tuple(edges))
