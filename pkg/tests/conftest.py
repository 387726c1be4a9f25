import networkx as nx
import pytest
from hypothesis import strategies as st

from labelvns import LabelledGraph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def nx_component_count(graph, labels):
    """Independent component count via networkx, ignoring our union-find."""
    g = nx.Graph()
    g.add_nodes_from(range(graph.node_count))
    g.add_edges_from((u, v) for u, v, c in graph.edges if c in labels)
    return nx.number_connected_components(g)


@pytest.fixture
def triangle():
    return LabelledGraph(3, ((0, 1, 0), (1, 2, 0), (0, 2, 0)), 1)


@pytest.fixture
def two_pairs():
    return LabelledGraph(4, ((0, 1, 0), (2, 3, 1)), 2)


@st.composite
def labelled_graphs(draw, max_nodes=8, max_labels=6):
    n = draw(st.integers(2, max_nodes))
    ell = draw(st.integers(1, max_labels))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    triples = [(u, v, c) for u, v in pairs for c in range(ell)]
    edges = draw(st.lists(st.sampled_from(triples), min_size=1, max_size=20, unique=True))
    edges = [(v, u, c) if draw(st.booleans()) else (u, v, c) for u, v, c in edges]
    return LabelledGraph(n, tuple(edges), ell)


def label_subsets(ell):
    return st.frozensets(st.integers(0, ell - 1))
