"""Pool-based enumeration: vertex-by-vertex growth of the maximal solutions.

:func:`gen_hered` handles hereditary properties on arbitrary graphs.
:func:`gen_ordered` runs the same loop from a fixed vertex for
connected-hereditary properties on trees and rooted-hereditary properties on
DAGs, where a suitable vertex order keeps every prefix solution extendable.
"""

import heapq

from .errors import ContractError
from .framework import SolutionSet, is_max, restricted_all, restricted_with_vertex
from .graph import InducedSubgraph, PropertyClass, VertexSet
from .stats import EngineStats


def _prefix(G, order, i):
    mask = 0
    for v in order[:i]:
        mask |= 1 << v
    return InducedSubgraph(G, VertexSet.from_mask(mask))


def _grow(P, G, pool, order, first, last, v_r, stats):
    """Run outer iterations ``first..last-1`` (0-based positions in ``order``)."""
    for i in range(first, last):
        v = order[i]
        prefix = _prefix(G, order, i + 1)
        for H in list(pool):
            pool.discard(H)
            U = InducedSubgraph(G, VertexSet.from_mask(H.mask | (1 << v)))
            stats.restricted_calls += 1
            if v_r is None:
                found = restricted_all(P, U)
            else:
                found = restricted_with_vertex(P, U, v_r)
            for H2 in found:
                if is_max(P, InducedSubgraph(G, H2), prefix):
                    pool.add(H2)
        stats.outer_iterations += 1
        stats.note_pool(len(pool))
    return pool


def _require_hereditary(P):
    if P.pclass is not PropertyClass.HEREDITARY:
        raise ContractError(f"{P.name} is {P.pclass.value}; the pool engine needs a hereditary property")


def prefix_solutions(P, G, i, stats=None):
    """Pool after ``i`` outer iterations, i.e. the maximal solutions of G[{0..i-1}]."""
    _require_hereditary(P)
    if not 0 <= i <= G.n:
        raise ContractError(f"prefix length {i} outside 0..{G.n}")
    stats = stats if stats is not None else EngineStats()
    stats.start()
    pool = _grow(P, G, SolutionSet([VertexSet()]), list(range(G.n)), 0, i, None, stats)
    stats.stop()
    stats.emissions = len(pool)
    return pool


def gen_hered(P, G, stats=None):
    """All maximal P-subgraphs of ``G`` for a hereditary property ``P``."""
    return prefix_solutions(P, G, G.n, stats)


def _is_tree(G):
    if G.n == 0:
        return False
    pairs = sum(m.bit_count() for m in G.und_adj) // 2
    return pairs == G.n - 1 and G.kernels.is_connected(G.und_adj, G.full_mask)


def _bfs_order(G, start):
    order = [start]
    seen = 1 << start
    i = 0
    while i < len(order):
        fresh = G.und_adj[order[i]] & ~seen
        seen |= fresh
        while fresh:
            low = fresh & -fresh
            order.append(low.bit_length() - 1)
            fresh ^= low
        i += 1
    return order


def _topological_order(G, start):
    """Kahn order with smallest-id tie-breaking: vertices reachable from
    ``start`` first (``start`` leads), then the rest.  None if ``G`` has a cycle."""
    reach = G.kernels.closure(G.out_adj, G.full_mask, 1 << start)
    order = []
    for part in (reach, G.full_mask & ~reach):
        indeg = {}
        for u, v in G.edges:
            if (part >> u) & 1 and (part >> v) & 1:
                indeg[v] = indeg.get(v, 0) + 1
        members = [v for v in range(G.n) if (part >> v) & 1]
        heap = [v for v in members if indeg.get(v, 0) == 0]
        heapq.heapify(heap)
        done = 0
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            done += 1
            succ = G.out_adj[u] & part
            while succ:
                low = succ & -succ
                x = low.bit_length() - 1
                indeg[x] -= 1
                if indeg[x] == 0:
                    heapq.heappush(heap, x)
                succ ^= low
        if done != len(members):
            return None
    return order


def vertex_order(P, G, v_r):
    """Processing order for :func:`gen_ordered`, validating its preconditions."""
    if not 0 <= v_r < G.n:
        raise ContractError(f"vertex {v_r} is not in the graph")
    if P.pclass is PropertyClass.CONNECTED_HEREDITARY:
        if not _is_tree(G):
            raise ContractError("ordered engine needs a graph whose underlying undirected graph is a tree")
        return _bfs_order(G, v_r)
    if P.pclass is PropertyClass.ROOTED_HEREDITARY:
        if G.root is None or v_r != G.root:
            raise ContractError("ordered engine needs the start vertex to be the root")
        order = _topological_order(G, v_r)
        if order is None:
            raise ContractError("ordered engine needs an acyclic graph")
        return order
    raise ContractError(f"{P.name} is hereditary; use gen_hered")


def gen_ordered(P, G, v_r, stats=None):
    """Maximal P-subgraphs through ``v_r`` on trees (connected-hereditary)
    or DAGs rooted at ``v_r`` (rooted-hereditary)."""
    order = vertex_order(P, G, v_r)
    seed = VertexSet.from_mask(1 << v_r)
    if not P.sat_fn(InducedSubgraph(G, seed)):
        raise ContractError(f"G[{{{v_r}}}] does not satisfy {P.name}")
    stats = stats if stats is not None else EngineStats()
    stats.start()
    pool = _grow(P, G, SolutionSet([seed]), order, 1, len(order), v_r, stats)
    stats.stop()
    stats.emissions = len(pool)
    return pool
