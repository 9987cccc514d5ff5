import random

import networkx as nx
import pytest

from blockrainbow import FamilySpec, Graph, generate


@pytest.fixture
def bowtie():
    return generate(FamilySpec("bowtie"))


@pytest.fixture
def path4():
    return generate(FamilySpec("path", (4,)))


@pytest.fixture
def windmill():
    """Three copies of K4 sharing vertex 0."""
    return generate(FamilySpec("windmill", (3, 4)))


@pytest.fixture
def k3_triangles():
    return generate(FamilySpec("kn_triangles", (3,)))


@pytest.fixture
def triangle_chain_of_three():
    """Triangles {0,1,2}, {0,3,4} and {2,5,6}; vertex 1 has eccentricity 2."""
    return Graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (2, 5), (2, 6), (5, 6)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_chordal(seed, n, max_attach=3):
    """Chordal graph grown by attaching each new vertex to a clique of the
    current graph (every new vertex is simplicial when added)."""
    rng = random.Random(seed)
    edges = []
    cliques = [[0]]
    for v in range(1, n):
        base = rng.choice(cliques)
        size = rng.randint(1, min(max_attach, len(base)))
        attach = rng.sample(base, size)
        edges += [(u, v) for u in attach]
        cliques.append(attach + [v])
    return Graph(n, edges)


@pytest.fixture
def chordal_factory():
    return random_chordal


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; the lines are
    printed in the terminal summary whether or not the test passed."""

    def record(label: str, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
