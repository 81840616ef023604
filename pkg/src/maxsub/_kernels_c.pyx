# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for graphs with at most 64 vertices.

Same functions and semantics as ``_kernels_py``.  ``adj`` must expose a
buffer of unsigned 64-bit words (``array('Q')``).
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline u64 _nbhd(const u64[:] adj, u64 frontier) noexcept nogil:
    cdef u64 out = 0
    while frontier:
        out |= adj[__builtin_ctzll(frontier)]
        frontier &= frontier - 1
    return out


cdef inline u64 _closure(const u64[:] adj, u64 mask, u64 start) noexcept nogil:
    cdef u64 seen = start & mask
    cdef u64 frontier = seen
    while frontier:
        frontier = _nbhd(adj, frontier) & mask & ~seen
        seen |= frontier
    return seen


def closure(const u64[:] adj, u64 mask, u64 start):
    return _closure(adj, mask, start)


def is_connected(const u64[:] adj, u64 mask):
    if mask == 0:
        return True
    return _closure(adj, mask, mask & (~mask + 1)) == mask


def is_clique(const u64[:] adj, u64 mask):
    cdef u64 rest = mask
    cdef u64 low
    while rest:
        low = rest & (~rest + 1)
        if (adj[__builtin_ctzll(rest)] | low) & mask != mask:
            return False
        rest ^= low
    return True


def has_edge_within(const u64[:] adj, u64 mask):
    cdef u64 rest = mask
    while rest:
        if adj[__builtin_ctzll(rest)] & mask:
            return True
        rest &= rest - 1
    return False


def bipartition(const u64[:] adj, u64 mask):
    cdef u64 side = 0
    cdef u64 todo = mask
    cdef u64 layer, seen, nbrs
    cdef int parity
    while todo:
        layer = todo & (~todo + 1)
        seen = layer
        parity = 0
        while layer:
            nbrs = _nbhd(adj, layer) & mask
            if nbrs & layer:
                return -1
            if parity == 0:
                side |= layer
            layer = nbrs & ~seen
            seen |= layer
            parity ^= 1
        todo &= ~seen
    return side


def is_star(const u64[:] adj, u64 mask):
    cdef int k = __builtin_popcountll(mask)
    cdef u64 rest, low, others
    if k == 0:
        return False
    if k <= 2:
        return _closure(adj, mask, mask & (~mask + 1)) == mask
    rest = mask
    while rest:
        low = rest & (~rest + 1)
        if (adj[__builtin_ctzll(rest)] | low) & mask == mask:
            others = mask & ~low
            while others:
                if adj[__builtin_ctzll(others)] & mask != low:
                    return False
                others &= others - 1
            return True
        rest ^= low
    return False


def maximal_filter(masks):
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    cdef Py_ssize_t n = len(ordered)
    cdef Py_ssize_t i, j, nkept = 0
    cdef u64 m
    cdef u64 *kept = <u64 *> malloc((n if n else 1) * sizeof(u64))
    if kept == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            m = ordered[i]
            for j in range(nkept):
                if m & ~kept[j] == 0:
                    break
            else:
                kept[nkept] = m
                nkept += 1
        result = [kept[j] for j in range(nkept)]
    finally:
        free(kept)
    result.sort()
    return result
