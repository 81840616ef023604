"""Brute-force reference enumerator.

Deliberately naive: every vertex subset is tested and maximality is decided
by inclusion against all other members, never by single-vertex extension.
"""

from .errors import OracleLimitError
from .framework import SolutionSet
from .graph import InducedSubgraph, VertexSet

DEFAULT_MAX_N = 20


def _check(G, max_n):
    if G.n > max_n:
        raise OracleLimitError(f"oracle refuses graphs with more than {max_n} vertices (got {G.n})")


def member_masks(P, G, max_n=DEFAULT_MAX_N):
    """Bitmasks of all P-subgraphs of ``G``, in ascending binary order."""
    _check(G, max_n)
    return [m for m in range(1 << G.n) if P.sat_fn(InducedSubgraph(G, VertexSet.from_mask(m)))]


def _has_strict_superset(m, members, member_set, full):
    free = full & ~m
    if (1 << free.bit_count()) < len(members):
        s = free
        while s:
            if (m | s) in member_set:
                return True
            s = (s - 1) & free
        return False
    return any(o != m and (m & o) == m for o in members)


def brute_force_all(P, G, max_n=DEFAULT_MAX_N):
    members = member_masks(P, G, max_n)
    member_set = set(members)
    full = (1 << G.n) - 1
    maximal = [
        VertexSet.from_mask(m) for m in members if not _has_strict_superset(m, members, member_set, full)
    ]
    return SolutionSet(sorted(maximal, key=VertexSet.sort_key))


def brute_force_with_vertex(P, G, v, max_n=DEFAULT_MAX_N):
    return brute_force_all(P, G, max_n).containing(v)
