import itertools
import random

import pytest

from blockrainbow import EdgeColoring, FamilySpec, Graph, GraphError, generate
from blockrainbow.formats import parse_graph_with_pairs
from blockrainbow.graph import recognize
from blockrainbow.oracle import (
    all_geodesics,
    exact_src_coloring,
    is_strong_rainbow_connected,
    subset_src_coloring,
    subset_src_decide,
)
from blockrainbow.reduction import (
    build_split_instance,
    extend_star_coloring,
    format_instance,
    restrict_to_star,
)


def star(leaves):
    return generate(FamilySpec("star", (leaves,)))


def all_pair_sets(leaves):
    pairs = list(itertools.combinations(range(1, leaves + 1), 2))
    for r in range(len(pairs) + 1):
        yield from itertools.combinations(pairs, r)


def _check_split(inst):
    g = inst.graph
    assert inst.clique_part | inst.independent_part == set(range(g.n))
    assert not inst.clique_part & inst.independent_part
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(sorted(inst.clique_part), 2))
    assert not any(g.has_edge(u, v) for u, v in itertools.combinations(sorted(inst.independent_part), 2))
    assert recognize(g).is_split


def test_three_leaf_instance():
    inst = build_split_instance(star(3), [(1, 2), (2, 3)])
    g = inst.graph
    assert (g.n, g.m) == (8, 18)
    assert inst.leaf_gadgets == {1: 4, 2: 5, 3: 6}
    assert inst.pair_gadgets == {(1, 3): 7}
    assert inst.independent_part == {1, 2, 3}
    _check_split(inst)


def test_two_leaf_instance():
    inst = build_split_instance(star(2), [(1, 2)])
    assert (inst.graph.n, inst.graph.m) == (5, 7)
    assert inst.pair_gadgets == {}


def test_one_leaf_instance_is_a_triangle():
    inst = build_split_instance(Graph(2, [(0, 1)]), [])
    assert inst.graph.edges == ((0, 1), (0, 2), (1, 2))
    c = extend_star_coloring(inst, EdgeColoring({(0, 1): 0}), 3)
    assert {c[e] for e in inst.graph.edges} == {0}


def test_three_leaf_extension():
    inst = build_split_instance(star(3), [(1, 2), (2, 3)])
    chi = EdgeColoring({(0, 1): 0, (0, 2): 1, (0, 3): 0})
    c = extend_star_coloring(inst, chi, 3)
    assert c.color_count <= 3
    assert is_strong_rainbow_connected(inst.graph, c)


def test_rainbow_star_with_all_pairs():
    for leaves in range(1, 6):
        pairs = list(itertools.combinations(range(1, leaves + 1), 2))
        inst = build_split_instance(star(leaves), pairs)
        chi = EdgeColoring({(0, v): v - 1 for v in range(1, leaves + 1)})
        extend_star_coloring(inst, chi, max(3, leaves))


def test_bad_star_coloring_is_reported():
    inst = build_split_instance(star(2), [(1, 2)])
    with pytest.raises(ValueError, match="not strong rainbow connected"):
        extend_star_coloring(inst, EdgeColoring({(0, 1): 0, (0, 2): 0}), 3)


def test_errors():
    inst = build_split_instance(star(2), [])
    with pytest.raises(GraphError, match="k must be at least 3"):
        extend_star_coloring(inst, EdgeColoring({(0, 1): 0, (0, 2): 1}), 2)
    with pytest.raises(GraphError, match="outside"):
        extend_star_coloring(inst, EdgeColoring({(0, 1): 0, (0, 2): 5}), 3)
    with pytest.raises(GraphError, match="not a star"):
        build_split_instance(generate(FamilySpec("path", (4,))), [])
    with pytest.raises(GraphError, match="not a pair of leaves"):
        build_split_instance(star(3), [(0, 2)])


@pytest.mark.parametrize("leaves", [1, 2, 3, 4])
def test_instances_are_split_with_unique_pair_geodesics(leaves):
    for pairs in all_pair_sets(leaves):
        inst = build_split_instance(star(leaves), pairs)
        _check_split(inst)
        for p, q in inst.pairs:
            (only,) = all_geodesics(inst.graph, p, q)
            assert len(only) == 2


@pytest.mark.parametrize("leaves", [2, 3, 4])
def test_decide_true_means_extension_works(leaves):
    for pairs in all_pair_sets(leaves):
        inst = build_split_instance(star(leaves), pairs)
        chi = subset_src_coloring(star(leaves), pairs, 3)
        if chi is None:
            continue
        assert is_strong_rainbow_connected(inst.graph, extend_star_coloring(inst, chi, 3))


def test_restriction_of_optimal_split_coloring():
    # any strong rainbow coloring of the split graph serves P on the star
    for leaves in (2, 3):
        for pairs in all_pair_sets(leaves):
            inst = build_split_instance(star(leaves), pairs)
            if inst.graph.m > 20:
                continue
            k, c = exact_src_coloring(inst.graph, 4)
            assert c is not None
            chi = restrict_to_star(inst, c)
            assert all(chi[(0, u)] != chi[(0, v)] for u, v in inst.pairs)


def test_restriction_on_random_colorings():
    rng = random.Random(6)
    inst = build_split_instance(star(4), [(1, 2), (2, 3), (3, 4), (1, 4)])
    hits = 0
    for _ in range(3000):
        c = EdgeColoring.from_list(inst.graph, [rng.randrange(3) for _ in range(inst.graph.m)])
        if is_strong_rainbow_connected(inst.graph, c):
            hits += 1
            chi = restrict_to_star(inst, c)
            assert all(chi[(0, u)] != chi[(0, v)] for u, v in inst.pairs)
    # sanity: the search actually exercised the property at least once or
    # the pair set is not 3-colorable
    assert hits > 0 or not subset_src_decide(star(4), inst.pairs, 3)


def test_size_does_not_depend_on_k():
    inst = build_split_instance(star(3), [(1, 2), (2, 3)])
    chi = EdgeColoring({(0, 1): 0, (0, 2): 1, (0, 3): 0})
    c3 = extend_star_coloring(inst, chi, 3)
    c10 = extend_star_coloring(inst, chi, 10)
    assert set(dict(c3.items())) == set(dict(c10.items())) == set(inst.graph.edges)


def test_instance_file_roundtrip():
    inst = build_split_instance(star(3), [(1, 2), (2, 3)])
    text = format_instance(inst)
    assert "# pair 1 2" in text and "# part independent 1 2 3" in text
    g, pairs = parse_graph_with_pairs(text)
    assert g == inst.graph and pairs == [(1, 2), (2, 3)]
