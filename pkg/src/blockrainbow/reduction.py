"""Star plus pair set to split graph, and the matching coloring extension.

Given a star with center ``a`` and a set ``P`` of leaf pairs, the split
graph adds a gadget vertex ``x_v`` per leaf (joined to ``v`` and ``a``), a
gadget vertex ``x_uv`` per leaf pair outside ``P`` (joined to ``u``, ``v``
and ``a``), and makes all gadget vertices pairwise adjacent.  The leaves
stay independent; the center and the gadgets form the clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .coloring import EdgeColoring
from .formats import format_graph
from .graph import Edge, Graph, GraphError, canonical_edge
from .oracle import is_strong_rainbow_connected, normalize_leaf_pairs, star_center


@dataclass(frozen=True)
class SplitInstance:
    graph: Graph
    center: int
    star_vertices: tuple[int, ...]
    pairs: tuple[Edge, ...]
    leaf_gadgets: dict[int, int]
    pair_gadgets: dict[Edge, int]
    clique_part: frozenset[int]
    independent_part: frozenset[int]

    def star_edges(self) -> list[Edge]:
        return [canonical_edge(self.center, v) for v in self.star_vertices if v != self.center]


def build_split_instance(star: Graph, pairs: Iterable[Edge]) -> SplitInstance:
    center = star_center(star)
    p = sorted(normalize_leaf_pairs(star, center, pairs))
    leaves = [v for v in range(star.n) if v != center]
    pset = set(p)

    next_id = star.n
    leaf_gadgets: dict[int, int] = {}
    for v in leaves:
        leaf_gadgets[v] = next_id
        next_id += 1
    pair_gadgets: dict[Edge, int] = {}
    for e in combinations(leaves, 2):
        if e not in pset:
            pair_gadgets[e] = next_id
            next_id += 1

    edges: list[Edge] = list(star.edges)
    for v, x in leaf_gadgets.items():
        edges += [(v, x), (center, x)]
    for (u, v), x in pair_gadgets.items():
        edges += [(u, x), (v, x), (center, x)]
    gadgets = list(leaf_gadgets.values()) + list(pair_gadgets.values())
    edges += list(combinations(gadgets, 2))

    g = Graph(next_id, edges)
    return SplitInstance(
        graph=g,
        center=center,
        star_vertices=tuple(range(star.n)),
        pairs=tuple(p),
        leaf_gadgets=leaf_gadgets,
        pair_gadgets=pair_gadgets,
        clique_part=frozenset([center, *gadgets]),
        independent_part=frozenset(leaves),
    )


def extend_star_coloring(
    inst: SplitInstance, chi: EdgeColoring, k: int, verify: bool = True
) -> EdgeColoring:
    """Extend a star coloring with colors ``0..k-1`` to the split graph.

    Leaf gadget edges get color 0, gadget-gadget edges color 1; a pair gadget
    ``x_uv`` (``u < v``) gets 0 toward ``u`` and 1 toward ``v`` and the
    center.  With ``verify`` the result must be strong rainbow connected,
    otherwise ``ValueError`` is raised (the star coloring did not serve the
    pairs).
    """
    if k < 3:
        raise GraphError("k must be at least 3")
    colors: dict[Edge, int] = {}
    for e in inst.star_edges():
        try:
            c = chi[e]
        except KeyError:
            raise GraphError(f"star edge {e} has no color") from None
        if not 0 <= c < k:
            raise GraphError(f"color {c} on {e} outside 0..{k - 1}")
        colors[e] = c
    a = inst.center
    for v, x in inst.leaf_gadgets.items():
        colors[canonical_edge(v, x)] = 0
        colors[canonical_edge(a, x)] = 0
    for (u, v), x in inst.pair_gadgets.items():
        colors[canonical_edge(u, x)] = 0
        colors[canonical_edge(v, x)] = 1
        colors[canonical_edge(a, x)] = 1
    gadgets = sorted([*inst.leaf_gadgets.values(), *inst.pair_gadgets.values()])
    for e in combinations(gadgets, 2):
        colors[e] = 1
    out = EdgeColoring(colors)
    if verify and not is_strong_rainbow_connected(inst.graph, out):
        raise ValueError("extended coloring is not strong rainbow connected")
    return out


def restrict_to_star(inst: SplitInstance, coloring: EdgeColoring) -> EdgeColoring:
    return EdgeColoring({e: coloring[e] for e in inst.star_edges()})


def format_instance(inst: SplitInstance) -> str:
    comments = [
        "part clique " + " ".join(map(str, sorted(inst.clique_part))),
        "part independent " + " ".join(map(str, sorted(inst.independent_part))),
    ]
    return format_graph(inst.graph, inst.pairs, comments)
