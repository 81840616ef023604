"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also collected into the
terminal summary) and then asserts the criterion at its stated tolerance.
Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline.
"""

import itertools
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES, random_digraphs, undirected_graphs
from maxsub.families import disjoint_triangles, random_digraph
from maxsub.graph import Graph, VertexSet
from maxsub.hered import _is_tree, _topological_order, gen_hered, gen_ordered, prefix_solutions
from maxsub.oracle import brute_force_all
from maxsub.properties import (
    BIPARTITE,
    CATALOG,
    CLIQUE,
    CONNECTED_BIPARTITE,
    G1_LABELS,
    INDEPENDENT_SET,
    ROOTED_CLIQUE,
    STAR,
    make_G1,
    make_G2,
)
from maxsub.stats import EngineStats
from maxsub.vcs import enumerate_incremental, gen_all_connected, gen_with_vertex

pytestmark = pytest.mark.acceptance

HEREDITARY = (CLIQUE, INDEPENDENT_SET, BIPARTITE)
# properties whose restricted solvers are specialized and polynomial
STREAMING = (CONNECTED_BIPARTITE, STAR, ROOTED_CLIQUE, CLIQUE, INDEPENDENT_SET)


def report(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    print(line, flush=True)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def relabel(G, mask):
    """``G[mask]`` as a standalone graph on ``0..k-1``, plus the id map."""
    ids = [v for v in range(G.n) if mask >> v & 1]
    pos = {v: i for i, v in enumerate(ids)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    root = pos.get(G.root) if G.root is not None else None
    return Graph(len(ids), edges, root), ids


def test_c1_g1_reproduction():
    lab = {name: i for i, name in enumerate(G1_LABELS)}
    everything = set(range(5))
    expected = {
        VertexSet(everything - {lab["w"]}),
        VertexSet(everything - {lab["u2"]}),
        VertexSet(everything - {lab["v1"], lab["v2"], lab["u1"]}),
    }
    t0 = time.perf_counter()
    got = gen_all_connected(CONNECTED_BIPARTITE, make_G1())
    elapsed = time.perf_counter() - t0
    ok = got == expected and len(got) == 3 and elapsed < 1.0
    report(1, "G1 yields the three listed graphs", ok, f"got {got.as_tuples()}, {elapsed:.4f}s < 1s")


def test_c2_g2_counts():
    counts = []
    t0 = time.perf_counter()
    for n in range(1, 9):
        counts.append(len(gen_hered(BIPARTITE, make_G2(n))))
    elapsed = time.perf_counter() - t0
    expected = [2**n + 1 for n in range(1, 9)]
    ok = counts == expected and elapsed < 30.0
    report(2, "G2(n) has 2^n+1 solutions for n=1..8", ok, f"counts {counts}, {elapsed:.3f}s < 30s")


def _ordered_applicable(P, G):
    if P.pclass.value == "connected-hereditary":
        return _is_tree(G)
    if P.pclass.value == "rooted-hereditary":
        return G.root is not None and _topological_order(G, G.root) is not None
    return False


def test_c3_oracle_equivalence():
    graphs = list(undirected_graphs(5)) + list(random_digraphs(500, 9, seed=2024))
    runs = mismatches = 0
    first_bad = None
    t0 = time.perf_counter()
    for G in graphs:
        for P in CATALOG.values():
            ref = brute_force_all(P, G)
            results = []
            if P.pclass.value == "hereditary":
                results.append(("hered", ref, gen_hered(P, G)))
            else:
                starts = [G.root] if P.pclass.value == "rooted-hereditary" and G.root is not None else []
                if P.pclass.value == "connected-hereditary":
                    starts = list(range(G.n))
                for v in starts:
                    if P.holds(G, 1 << v):
                        results.append((f"vcs@{v}", ref.containing(v), gen_with_vertex(P, G, v)))
                        if _ordered_applicable(P, G):
                            results.append((f"ordered@{v}", ref.containing(v), gen_ordered(P, G, v)))
            results.append(("incremental", set(ref), set(enumerate_incremental(P, G))))
            for engine, want, got in results:
                runs += 1
                if got != want:
                    mismatches += 1
                    first_bad = first_bad or (engine, P.name, G)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 300.0
    detail = f"{len(graphs)} graphs, {runs} engine runs, {mismatches} mismatches, {elapsed:.1f}s < 300s"
    if first_bad:
        detail += f", first: {first_bad}"
    report(3, "every engine equals the brute-force oracle", ok, detail)


def test_c4_prefix_law_and_monotone_pool():
    checked = violations = 0
    for G in undirected_graphs(5):
        for P in HEREDITARY:
            sizes = []
            for i in range(G.n + 1):
                pool = prefix_solutions(P, G, i)
                sub, _ = relabel(G, (1 << i) - 1)
                if pool != brute_force_all(P, sub):
                    violations += 1
                sizes.append(len(pool))
            if any(a > b for a, b in zip(sizes, sizes[1:])):
                violations += 1
            checked += 1
    report(4, "prefix law and pool monotonicity", violations == 0, f"{checked} runs, {violations} violations")


def _delay_graphs():
    yield from undirected_graphs(5)
    yield make_G1()
    for n in range(1, 6):
        yield make_G2(n)
    for k in range(1, 5):
        yield disjoint_triangles(k)
    rng = random.Random(77)
    for _ in range(120):
        yield random_digraph(rng.randint(6, 12), rng.choice((0.15, 0.3, 0.5, 0.7)), rng)


def test_c5_incremental_delay():
    worst_emit = worst_arrive = (0.0, None)
    over = 0
    graphs = 0
    for G in _delay_graphs():
        graphs += 1
        n2 = G.n * G.n
        for P in STREAMING:
            stats = EngineStats()
            list(enumerate_incremental(P, G, stats=stats))
            e, a = stats.max_emission_gap, stats.max_arrival_gap
            if e > n2:
                over += 1
            if n2 and e / n2 > worst_emit[0]:
                worst_emit = (e / n2, (P.name, G.n, e))
            if n2 and a / n2 > worst_arrive[0]:
                worst_arrive = (a / n2, (P.name, G.n, a))
    detail = (
        f"{graphs} graphs; distinct-emission gap worst {worst_emit[0]:.2f}*n^2 at {worst_emit[1]}, "
        f"{over} runs over n^2; per-call Stack2 arrival gap worst {worst_arrive[0]:.2f}*n^2 at {worst_arrive[1]}"
    )
    report(5, "gap between consecutive emissions <= n^2", over == 0, detail)


def test_c6_k_limit():
    rng = random.Random(606)
    runs = bad = 0
    worst = 0.0
    for _ in range(25):
        G = random_digraph(12, rng.choice((0.2, 0.35, 0.5)), rng, root_prob=1.0)
        for P in STREAMING:
            total = len(list(enumerate_incremental(P, G)))
            for k in (1, 2, 3):
                stats = EngineStats()
                out = list(enumerate_incremental(P, G, k=k, stats=stats))
                runs += 1
                worst = max(worst, stats.outer_iterations / (k * 144))
                if len(out) != min(k, total) or stats.outer_iterations > k * 144:
                    bad += 1
    report(6, "k-limit halts after k solutions within k*n^2 iterations", bad == 0,
           f"{runs} runs on n=12, {bad} violations, worst iterations/(k*n^2) = {worst:.3f}")


def test_c7_triangle_scaling():
    per_solution = []
    counts = []
    for k in range(3, 8):
        G = disjoint_triangles(k)
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            K = len(gen_hered(INDEPENDENT_SET, G))
            best = min(best, time.perf_counter() - t0)
        counts.append(K)
        per_solution.append(best / K)
    ratio = max(per_solution) / min(per_solution)
    ok = counts == [3**k for k in range(3, 8)] and ratio < 10.0
    report(7, "elapsed/K roughly flat on k disjoint triangles", ok,
           f"K {counts}, elapsed/K spread {ratio:.2f}x < 10x")


def _count_through_vertex_monotone(P, G, starts):
    checked = violations = 0
    for v_r in starts:
        if not P.holds(G, 1 << v_r):
            continue
        whole_count = len(brute_force_all(P, G).containing(v_r))
        for mask in range(1 << G.n):
            if not mask >> v_r & 1:
                continue
            sub, ids = relabel(G, mask)
            part = len(brute_force_all(P, sub).containing(ids.index(v_r)))
            checked += 1
            if part > whole_count:
                violations += 1
    return checked, violations


def test_c8_count_through_vertex_monotone():
    checked = violations = 0
    for G in undirected_graphs(5):
        c, v = _count_through_vertex_monotone(CONNECTED_BIPARTITE, G, range(G.n))
        checked += c
        violations += v
        c, v = _count_through_vertex_monotone(ROOTED_CLIQUE, G, [G.root])
        checked += c
        violations += v
    report(8, "|MaxSolVert(G[H]; v_r)| <= |MaxSolVert(G; v_r)|", violations == 0,
           f"{checked} (G, H, v_r) triples, {violations} violations")
