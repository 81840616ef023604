"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload builds its graphs after selecting the backend, since graphs
bind their kernels at construction.
"""

import argparse
import random
import time

from maxsub import kernels
from maxsub.families import disjoint_triangles, random_digraph
from maxsub.graph import Graph
from maxsub.hered import gen_hered
from maxsub.oracle import brute_force_all
from maxsub.properties import BIPARTITE, CONNECTED_BIPARTITE, INDEPENDENT_SET, STAR, make_G2
from maxsub.vcs import gen_all_connected


def _raw_bipartition():
    G = random_digraph(16, 0.15, random.Random(1))
    k, adj = G.kernels, G.und_adj
    return sum(1 for m in range(1 << 16) if k.bipartition(adj, m) != -1)


def _oracle_bipartite():
    G = random_digraph(13, 0.25, random.Random(2))
    return len(brute_force_all(BIPARTITE, G))


def _hered_g2():
    return len(gen_hered(BIPARTITE, make_G2(8)))


def _hered_triangles():
    return len(gen_hered(INDEPENDENT_SET, disjoint_triangles(6)))


def _vcs_random():
    rng = random.Random(3)
    total = 0
    for _ in range(20):
        G = random_digraph(12, 0.3, rng)
        total += len(gen_all_connected(CONNECTED_BIPARTITE, G)) + len(gen_all_connected(STAR, G))
    return total


WORKLOADS = [
    ("bipartition, all 2^16 subsets", _raw_bipartition),
    ("oracle, bipartite, n=13", _oracle_bipartite),
    ("gen_hered, bipartite, G2(8)", _hered_g2),
    ("gen_hered, independent-set, 6 triangles", _hered_triangles),
    ("vcs, cbip+star, 20 random n=12", _vcs_random),
]


def run(repeat):
    backends = kernels.available_backends()
    previous = kernels.get_backend()
    results = {}
    try:
        for backend in backends:
            kernels.set_backend(backend)
            Graph(1)  # warm the import path
            for name, fn in WORKLOADS:
                best = float("inf")
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    value = fn()
                    best = min(best, time.perf_counter() - t0)
                results[name, backend] = (best, value)
    finally:
        kernels.set_backend(previous)
    header = f"{'workload':44s}" + "".join(f"{b:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name, _ in WORKLOADS:
        values = {results[name, b][1] for b in backends}
        assert len(values) == 1, f"backends disagree on {name}: {values}"
        line = f"{name:44s}" + "".join(f"{results[name, b][0]:12.4f}" for b in backends)
        if len(backends) == 2:
            line += f"{results[name, 'python'][0] / results[name, 'c'][0]:10.2f}x"
        print(line)
    if len(backends) == 1:
        print("compiled kernels unavailable; only the pure-Python backend was timed")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    run(ap.parse_args().repeat)
