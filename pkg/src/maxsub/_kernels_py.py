"""Pure-Python bitset kernels.

Every function takes a per-vertex adjacency table ``adj`` (``adj[v]`` is the
bitmask of neighbours of ``v``) and a vertex bitmask.  The compiled module
``_kernels_c`` exports the same functions with the same semantics; it is
limited to graphs with at most 64 vertices.
"""


def _neighbourhood(adj, frontier):
    out = 0
    while frontier:
        low = frontier & -frontier
        out |= adj[low.bit_length() - 1]
        frontier ^= low
    return out


def closure(adj, mask, start):
    """Vertices of ``mask`` reachable from ``start & mask`` along ``adj``."""
    seen = start & mask
    frontier = seen
    while frontier:
        frontier = _neighbourhood(adj, frontier) & mask & ~seen
        seen |= frontier
    return seen


def is_connected(adj, mask):
    if not mask:
        return True
    return closure(adj, mask, mask & -mask) == mask


def is_clique(adj, mask):
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if (adj[v] | low) & mask != mask:
            return False
        rest ^= low
    return True


def has_edge_within(adj, mask):
    rest = mask
    while rest:
        low = rest & -rest
        if adj[low.bit_length() - 1] & mask:
            return True
        rest ^= low
    return False


def bipartition(adj, mask):
    """Return the colour-0 side of a 2-colouring of ``mask``, or -1.

    Components are coloured by BFS layers; the lowest vertex of each
    component gets colour 0.  An edge inside a BFS layer means an odd cycle.
    """
    side = 0
    todo = mask
    while todo:
        layer = todo & -todo
        seen = layer
        parity = 0
        while layer:
            nbrs = _neighbourhood(adj, layer) & mask
            if nbrs & layer:
                return -1
            if parity == 0:
                side |= layer
            layer = nbrs & ~seen
            seen |= layer
            parity ^= 1
        todo &= ~seen
    return side


def is_star(adj, mask):
    k = mask.bit_count()
    if k == 0:
        return False
    if k <= 2:
        return is_connected(adj, mask)
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if (adj[v] | low) & mask == mask:
            others = mask & ~low
            while others:
                lo = others & -others
                if adj[lo.bit_length() - 1] & mask != low:
                    return False
                others ^= lo
            return True
        rest ^= low
    return False


def maximal_filter(masks):
    """Inclusion-maximal, duplicate-free subfamily, ordered by ascending mask."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept = []
    for m in ordered:
        for k in kept:
            if m & ~k == 0:
                break
        else:
            kept.append(m)
    kept.sort()
    return kept
