import itertools
import random

import pytest
from hypothesis import strategies as st

from maxsub.graph import Graph


def undirected_graphs(n_max, root=0):
    """Every labelled undirected graph on 1..n_max vertices."""
    for n in range(1, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
            yield Graph.undirected(n, edges, root=root)


def random_digraphs(count, n_max, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
        root = rng.randrange(n) if rng.random() < 0.8 else None
        yield Graph(n, edges, root)


def random_tree(n, rng, root=0):
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph.undirected(n, edges, root=root)


def random_dag(n, p, rng):
    """Random DAG on ``0..n-1`` with edges going up in id; vertex 0 is the root."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges, root=0)


@st.composite
def digraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    root = draw(st.one_of(st.none(), st.integers(0, n - 1)))
    return Graph(n, edges, root)


@pytest.fixture
def triangle():
    return Graph.undirected(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return Graph.undirected(3, [(0, 1), (1, 2)])


@pytest.fixture
def apex():
    # triangle 0-1-2 plus vertex 3 joined to 0 and 1
    return Graph.undirected(4, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1)])


# -- acceptance report -------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
