"""Graph families used by the benchmarks and tests."""

import random

from .graph import Graph
from .properties import make_G1, make_G2


def disjoint_triangles(k):
    edges = []
    for t in range(k):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        edges += [(a, b), (b, c), (a, c)]
    return Graph.undirected(3 * k, edges)


def random_digraph(n, p, rng, root_prob=0.8):
    """Each ordered pair is an edge with probability ``p``; a random root with
    probability ``root_prob``."""
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    root = rng.randrange(n) if n and rng.random() < root_prob else None
    return Graph(n, edges, root)


def random_graphs(count, n_max, seed, n_min=1):
    """``count`` seeded random digraphs with 1..n_max vertices and mixed density."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.choice((0.1, 0.2, 0.3, 0.45, 0.6, 0.8))
        out.append(random_digraph(n, p, rng))
    return out


__all__ = ["disjoint_triangles", "make_G1", "make_G2", "random_digraph", "random_graphs"]
