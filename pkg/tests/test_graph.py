import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockrainbow import FamilySpec, Graph, GraphError, generate
from blockrainbow.corpus import random_block_graph, sample_block_graphs
from blockrainbow.graph import (
    block_decomposition,
    distance_profile,
    is_geodetic,
    is_perfect_elimination_order,
    mcs_order,
    recognize,
    split_partition,
)

from conftest import to_nx


def test_graph_canonicalizes_edges():
    g = Graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g.n == 3 and g.m == 2
    assert g.has_edge(2, 1)
    assert g == Graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize(
    "n, edges, message",
    [
        (2, [(0, 0)], "self-loop"),
        (2, [(0, 1), (1, 0)], "duplicate"),
        (3, [(0, 1)], "not connected"),
        (2, [(0, 2)], "out of range"),
        (0, [], "at least one vertex"),
    ],
)
def test_graph_rejects_bad_input(n, edges, message):
    with pytest.raises(GraphError, match=message):
        Graph(n, edges)


def test_single_vertex_graph():
    g = Graph(1, [])
    bd = block_decomposition(g)
    assert bd.blocks == () and bd.cut_vertices == frozenset()
    prof = distance_profile(g)
    assert prof.diameter == 0 and prof.centers == {0}
    rep = recognize(g)
    assert rep.is_block_graph and rep.is_chordal and rep.is_bridgeless


class TestBlockDecomposition:
    def test_bowtie(self, bowtie):
        bd = block_decomposition(bowtie)
        assert bd.blocks == ((0, 1, 2), (2, 3, 4))
        assert bd.cut_vertices == {2}

    def test_path(self, path4):
        bd = block_decomposition(path4)
        assert bd.blocks == ((0, 1), (1, 2), (2, 3))
        assert bd.cut_vertices == {1, 2}

    def test_windmill(self, windmill):
        bd = block_decomposition(windmill)
        assert len(bd.blocks) == 3
        assert bd.cut_vertices == {0}

    def test_block_of_edge(self, bowtie):
        bd = block_decomposition(bowtie)
        assert bd.block_of_edge[(0, 1)] == 0
        assert bd.block_of_edge[(3, 4)] == 1

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_networkx(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 14)
        while True:
            h = nx.gnp_random_graph(n, rng.uniform(0.15, 0.6), seed=rng.getrandbits(32))
            if nx.is_connected(h):
                break
        g = Graph(n, h.edges())
        bd = block_decomposition(g)
        expected = sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
        assert list(bd.blocks) == expected
        assert bd.cut_vertices == set(nx.articulation_points(h))
        # invariants
        assert sum(bd.block_edge_counts()) == g.m
        for i, j in itertools.combinations(range(len(bd.blocks)), 2):
            common = set(bd.blocks[i]) & set(bd.blocks[j])
            assert len(common) <= 1
            assert common <= bd.cut_vertices
        for (u, v), b in bd.block_of_edge.items():
            assert u in bd.blocks[b] and v in bd.blocks[b]

    def test_deep_path_does_not_recurse(self):
        g = generate(FamilySpec("path", (20000,)))
        assert len(block_decomposition(g).blocks) == 19999


class TestRecognize:
    def test_four_cycle(self):
        rep = recognize(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
        assert not rep.is_chordal and rep.peo is None
        assert not rep.is_block_graph

    def test_bowtie(self, bowtie):
        rep = recognize(bowtie)
        assert rep.is_block_graph and rep.is_bridgeless and rep.bridge_edges == ()

    def test_path(self, path4):
        rep = recognize(path4)
        assert rep.is_block_graph and not rep.is_bridgeless
        assert rep.bridge_edges == ((0, 1), (1, 2), (2, 3))

    def test_diamond_is_chordal_not_block(self):
        rep = recognize(Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))
        assert rep.is_chordal and not rep.is_block_graph

    @pytest.mark.parametrize("seed", range(60))
    def test_chordality_matches_networkx(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 10)
        while True:
            h = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.getrandbits(32))
            if nx.is_connected(h):
                break
        g = Graph(n, h.edges())
        rep = recognize(g)
        assert rep.is_chordal == nx.is_chordal(h)
        if rep.is_chordal:
            assert _is_peo(g, rep.peo)
        if rep.is_block_graph:
            assert rep.is_chordal

    def test_peo_on_generated_chordal(self, chordal_factory):
        for seed in range(30):
            g = chordal_factory(seed, 25)
            rep = recognize(g)
            assert rep.is_chordal
            assert _is_peo(g, rep.peo)

    def test_mcs_permutation_is_respected(self, bowtie):
        assert mcs_order(bowtie, [3, 0, 1, 2, 4])[0] == 3
        with pytest.raises(GraphError):
            mcs_order(bowtie, [0, 1, 2])

    def test_split_partition(self):
        # K3 on {0,1,2} plus pendant independent vertices 3, 4
        g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
        clique, indep = split_partition(g)
        _assert_split(g, clique, indep)
        assert split_partition(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) is None

    @pytest.mark.parametrize("seed", range(30))
    def test_split_against_brute_force(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        while True:
            h = nx.gnp_random_graph(n, rng.uniform(0.3, 0.9), seed=rng.getrandbits(32))
            if nx.is_connected(h):
                break
        g = Graph(n, h.edges())
        brute = any(
            _valid_split(g, set(k), set(range(n)) - set(k))
            for r in range(n + 1)
            for k in itertools.combinations(range(n), r)
        )
        part = split_partition(g)
        assert (part is not None) == brute
        if part:
            _assert_split(g, *part)


def _is_peo(g, peo):
    """Every vertex's later neighbors form a clique (direct definition)."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if any(not g.has_edge(a, b) for a, b in itertools.combinations(later, 2)):
            return False
    return True


def _valid_split(g, clique, indep):
    return all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2)) and not any(
        g.has_edge(a, b) for a, b in itertools.combinations(indep, 2)
    )


def _assert_split(g, clique, indep):
    assert clique | indep == set(range(g.n)) and not clique & indep
    assert _valid_split(g, clique, indep)


class TestDistances:
    def test_path(self, path4):
        prof = distance_profile(path4)
        assert (prof.diameter, prof.radius, prof.centers) == (3, 2, {1, 2})

    def test_bowtie(self, bowtie):
        prof = distance_profile(bowtie)
        assert (prof.diameter, prof.radius, prof.centers) == (2, 1, {2})

    def test_k3_with_triangles(self, k3_triangles):
        expected = nx.diameter(to_nx(k3_triangles))
        assert expected == 3
        assert distance_profile(k3_triangles).diameter == expected

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 25), st.integers(2, 5))
    def test_metric_properties(self, seed, blocks, size):
        g = random_block_graph(seed, blocks, size)
        prof = distance_profile(g)
        d = prof.distances
        assert prof.radius <= prof.diameter <= 2 * prof.radius
        assert prof.diameter == max(prof.eccentricities)
        assert prof.centers
        rng = random.Random(seed)
        for _ in range(50):
            u, v, w = (rng.randrange(g.n) for _ in range(3))
            assert d[u][v] == d[v][u]
            assert d[u][w] <= d[u][v] + d[v][w]
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        assert all(d[u][v] == ref[u][v] for u in range(g.n) for v in range(g.n))


class TestGeodetic:
    def test_four_cycle(self):
        assert not is_geodetic(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))

    def test_single_edge(self):
        assert is_geodetic(Graph(2, [(0, 1)]))

    def test_odd_cycle_is_geodetic(self):
        assert is_geodetic(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]))

    def test_random_block_graphs_are_geodetic(self):
        graphs = sample_block_graphs(4, 500, max_blocks=60, max_vertices=200)
        assert all(is_geodetic(g) for g in graphs)

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_path_counting(self, seed):
        rng = random.Random(seed)
        while True:
            h = nx.gnp_random_graph(8, rng.uniform(0.25, 0.6), seed=rng.getrandbits(32))
            if nx.is_connected(h):
                break
        g = Graph(8, h.edges())
        expected = all(
            len(list(nx.all_shortest_paths(h, s, t))) == 1 for s, t in itertools.combinations(range(8), 2)
        )
        assert is_geodetic(g) == expected


def test_every_block_graph_passes_peo_check():
    for g in sample_block_graphs(9, 50):
        assert is_perfect_elimination_order(g, mcs_order(g))
