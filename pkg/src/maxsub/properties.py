"""Concrete properties, their specialized restricted solvers, and the two
example graph families used throughout the tests.

Each specialized solver receives the almost-satisfying graph ``U`` as an
induced subgraph and an optional required vertex ``v_r``; it returns the
maximal P-subgraphs of ``U`` (through ``v_r`` when given).
"""

from .errors import ContractError
from .framework import Property, SolutionSet, almost_satisfies, is_max
from .graph import Graph, InducedSubgraph, PropertyClass, VertexSet, is_rooted


def _bit(v):
    return 1 << v


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _sub(U, mask):
    return InducedSubgraph(U.parent, VertexSet.from_mask(mask))


# -- membership tests --------------------------------------------------------
# ``*_mask(G, mask)`` test ``G[mask]``; ``sat_*(H)`` take an induced subgraph.

def clique_mask(G, mask):
    return G.kernels.is_clique(G.und_adj, mask)


def independent_set_mask(G, mask):
    return not G.kernels.has_edge_within(G.und_adj, mask)


def bipartite_mask(G, mask):
    return G.kernels.bipartition(G.und_adj, mask) != -1


def connected_bipartite_mask(G, mask):
    k = G.kernels
    return mask != 0 and k.is_connected(G.und_adj, mask) and k.bipartition(G.und_adj, mask) != -1


def star_mask(G, mask):
    return G.kernels.is_star(G.und_adj, mask)


def rooted_clique_mask(G, mask):
    r = G.root
    if r is None or not (mask >> r) & 1:
        return False
    k = G.kernels
    return k.closure(G.out_adj, mask, 1 << r) == mask and k.is_clique(G.und_adj, mask)


def sat_clique(H):
    return clique_mask(H.parent, H.mask)


def sat_independent_set(H):
    return independent_set_mask(H.parent, H.mask)


def sat_bipartite(H):
    return bipartite_mask(H.parent, H.mask)


def sat_connected_bipartite(H):
    return connected_bipartite_mask(H.parent, H.mask)


def sat_star(H):
    return star_mask(H.parent, H.mask)


def sat_rooted_clique(H):
    return is_rooted(H) and sat_clique(H)


# -- specialized solvers -----------------------------------------------------

def _witness(P, U, w=None):
    if w is not None:
        return w
    w = almost_satisfies(P, U)
    if w is None:
        raise ContractError(f"graph on {list(U.vertices)} does not almost satisfy {P.name}")
    return w


def _finish(P, U, candidates, v_r):
    """Keep candidates that are members, contain ``v_r`` and are maximal in ``U``."""
    need = _bit(v_r) if v_r is not None else 0
    good = [m for m in set(candidates) if m & need == need and P.holds(U.parent, m)]
    kept = U.parent.kernels.maximal_filter(good)
    out = [VertexSet.from_mask(m) for m in kept if is_max(P, _sub(U, m), U)]
    return SolutionSet(sorted(out, key=VertexSet.sort_key))


def _und_nbrs(U, v):
    return U.parent.und_adj[v] & U.mask


def restricted_clique(U, v_r=None, w=None):
    # every maximal clique either avoids w (inside U - w) or lies in w's closed neighbourhood
    w = _witness(CLIQUE, U, w)
    rest = U.mask & ~_bit(w)
    return _finish(CLIQUE, U, [rest, _bit(w) | _und_nbrs(U, w)], v_r)


def restricted_independent_set(U, v_r=None, w=None):
    w = _witness(INDEPENDENT_SET, U, w)
    rest = U.mask & ~_bit(w)
    return _finish(INDEPENDENT_SET, U, [rest, _bit(w) | (rest & ~_und_nbrs(U, w))], v_r)


def _odd_cycle_through(U, X, w, side_a):
    """Vertices of a shortest odd cycle through ``w`` in ``U[X]``.

    ``X - w`` is bipartite with colour classes ``side_a`` / rest, so an odd
    cycle is ``w``, a shortest path from an A-neighbour of ``w`` to a
    B-neighbour of ``w`` inside ``X - w``, and back to ``w``.
    """
    G = U.parent
    inner = X & ~_bit(w)
    nw = G.und_adj[w] & inner
    sources = nw & side_a
    targets = nw & ~side_a
    parent = {v: None for v in _bits(sources)}
    frontier = list(parent)
    while frontier:
        nxt = []
        for u in frontier:
            if _bit(u) & targets:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path
            for x in _bits(G.und_adj[u] & inner):
                if x not in parent:
                    parent[x] = u
                    nxt.append(x)
        frontier = nxt
    return None


def restricted_connected_bipartite(U, v_r=None, w=None):
    """Maximal connected bipartite subgraphs of ``U`` where ``U - w`` is one.

    Besides ``U - w``, the solutions contain ``w``.  Any connected set through
    ``w`` that is not bipartite has an odd cycle through ``w``; a solution
    misses at least one vertex of it, so the search branches on those vertices
    and keeps only the component of ``w``.  The number of such solutions is
    not bounded by a constant (an odd cycle of length ``k`` has ``k``).
    """
    P = CONNECTED_BIPARTITE
    if P.holds(U.parent, U.mask):
        if v_r is None or v_r in U.vertices:
            return SolutionSet([U.vertices])
        return SolutionSet()
    w = _witness(P, U, w)
    G = U.parent
    k = G.kernels
    need = _bit(v_r) if v_r is not None else 0
    candidates = []
    rest = U.mask & ~_bit(w)
    if rest & need == need:
        candidates.append(rest)
    side_a = k.bipartition(G.und_adj, rest)
    protected = _bit(w) | need
    start = k.closure(G.und_adj, U.mask, _bit(w))
    found = []
    seen = set()
    stack = [start] if start & need == need else []
    while stack:
        X = stack.pop()
        if X in seen or any(X & ~F == 0 for F in found):
            continue
        seen.add(X)
        if k.bipartition(G.und_adj, X) != -1:
            found.append(X)
            continue
        cycle = _odd_cycle_through(U, X, w, side_a)
        for v in sorted(cycle, reverse=True):
            if _bit(v) & protected:
                continue
            child = k.closure(G.und_adj, X & ~_bit(v), _bit(w))
            if child & need == need:
                stack.append(child)
    candidates.extend(found)
    return _finish(P, U, candidates, v_r)


def restricted_star(U, v_r=None, w=None):
    """Maximal stars of ``U`` where ``U - w`` is a star.

    A star through ``w`` is centred at ``w`` (its leaves are independent
    neighbours of ``w``), at the centre ``c`` of ``U - w`` (with ``w`` a leaf),
    or at a leaf of ``U - w`` adjacent to ``w`` (then it has at most three
    vertices).  When ``U - w`` has at most two vertices either may be the
    centre.
    """
    P = STAR
    w = _witness(P, U, w)
    G = U.parent
    rest = U.mask & ~_bit(w)
    nw = G.und_adj[w] & rest
    if rest.bit_count() <= 2:
        centres = list(_bits(rest))
    else:
        centres = [c for c in _bits(rest) if (G.und_adj[c] | _bit(c)) & rest == rest]
    wb = _bit(w)
    candidates = [rest]
    for c in centres:
        cb = _bit(c)
        leaves = rest & ~cb
        candidates.append(wb | (leaves & nw))
        w_sees_c = bool(nw & cb)
        if w_sees_c:
            candidates.append(wb | cb)
            candidates.append(wb | cb | (leaves & ~nw))
        for leaf in _bits(leaves & nw):
            candidates.append(wb | _bit(leaf) | (0 if w_sees_c else cb))
    return _finish(P, U, candidates, v_r)


def restricted_rooted_clique(U, v_r=None, w=None):
    P = ROOTED_CLIQUE
    root = U.root
    if root is None:
        return SolutionSet()
    w = _witness(P, U, w)
    G = U.parent
    candidates = [U.mask & ~_bit(w)]
    closed = _bit(w) | _und_nbrs(U, w)
    if closed & _bit(root):
        candidates.append(G.kernels.closure(G.out_adj, closed, _bit(root)))
    return _finish(P, U, candidates, v_r)


CLIQUE = Property(
    "clique", PropertyClass.HEREDITARY, sat_clique, restricted_clique, restricted_clique, clique_mask
)
INDEPENDENT_SET = Property(
    "independent-set",
    PropertyClass.HEREDITARY,
    sat_independent_set,
    restricted_independent_set,
    restricted_independent_set,
    independent_set_mask,
)
# no polynomial solver is known to be complete here; the generic search is used
BIPARTITE = Property("bipartite", PropertyClass.HEREDITARY, sat_bipartite, mask_fn=bipartite_mask)
CONNECTED_BIPARTITE = Property(
    "connected-bipartite",
    PropertyClass.CONNECTED_HEREDITARY,
    sat_connected_bipartite,
    restricted_connected_bipartite,
    restricted_connected_bipartite,
    connected_bipartite_mask,
)
STAR = Property(
    "star", PropertyClass.CONNECTED_HEREDITARY, sat_star, restricted_star, restricted_star, star_mask
)
ROOTED_CLIQUE = Property(
    "rooted-clique",
    PropertyClass.ROOTED_HEREDITARY,
    sat_rooted_clique,
    restricted_rooted_clique,
    restricted_rooted_clique,
    rooted_clique_mask,
)

CATALOG = {
    p.name: p for p in (CLIQUE, INDEPENDENT_SET, BIPARTITE, CONNECTED_BIPARTITE, STAR, ROOTED_CLIQUE)
}


def get_property(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise ContractError(f"unknown property {name!r}; choose from {', '.join(CATALOG)}") from None


# -- example graphs ------------------------------------------------------------

G1_LABELS = ("v1", "v2", "u1", "u2", "w")


def make_G1():
    """Five-vertex graph with top side v1, v2, bottom side u1, u2 and an extra
    vertex w adjacent to v1, v2 and u2.  Vertex ids follow ``G1_LABELS``."""
    v1, v2, u1, u2, w = range(5)
    return Graph.undirected(5, [(v1, u1), (v2, u1), (v1, u2), (v2, u2), (w, v1), (w, v2), (w, u2)])


def G2_labels(n):
    labels = ["w"]
    for i in range(1, n + 1):
        labels += [f"v{i}", f"u{i}"]
    return tuple(labels)


def make_G2(n):
    """``w`` (id 0) joined to both ends of ``n`` disjoint edges v_i-u_i (ids 2i-1, 2i)."""
    if n < 1:
        raise ContractError("make_G2 needs n >= 1")
    edges = []
    for i in range(1, n + 1):
        v, u = 2 * i - 1, 2 * i
        edges += [(v, u), (0, v), (0, u)]
    return Graph.undirected(2 * n + 1, edges)
