"""Pluggable graph properties and the generic restricted solvers."""

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ContractError
from .graph import Graph, InducedSubgraph, PropertyClass, VertexSet, whole

__all__ = [
    "Property",
    "PropertyClass",
    "SolutionSet",
    "almost_satisfies",
    "generic_restricted",
    "is_max",
    "restricted_all",
    "restricted_with_vertex",
    "sat",
]


@dataclass(frozen=True)
class Property:
    """A graph property: a class tag plus a polynomial membership test.

    ``restricted_all_solver(U, None, w)`` and ``restricted_vertex_solver(U, v, w)``
    are optional specialized solvers.  They receive the almost-satisfying
    graph as an :class:`InducedSubgraph` ``U`` and a witness ``w`` (``U - w``
    is in the property) and return a :class:`SolutionSet` of vertex sets in
    the parent's ids.  ``mask_fn(G, mask)``, when given, must agree with
    ``sat_fn`` and lets the engines skip building subgraph objects.
    """

    name: str
    pclass: PropertyClass
    sat_fn: Callable[[InducedSubgraph], bool]
    restricted_all_solver: Optional[Callable] = None
    restricted_vertex_solver: Optional[Callable] = None
    mask_fn: Optional[Callable[[Graph, int], bool]] = None

    def __call__(self, H):
        return self.sat_fn(H)

    def holds(self, G, mask):
        """Membership of ``G[mask]``."""
        if self.mask_fn is not None:
            return self.mask_fn(G, mask)
        return self.sat_fn(InducedSubgraph(G, VertexSet.from_mask(mask)))


class SolutionSet:
    """Insertion-ordered, duplicate-free collection of :class:`VertexSet`."""

    __slots__ = ("_items",)

    def __init__(self, members=()):
        self._items = {}
        for m in members:
            self.add(m)

    def add(self, vs):
        """Insert ``vs``; return False if it was already present."""
        if not isinstance(vs, VertexSet):
            vs = VertexSet(vs)
        if vs in self._items:
            return False
        self._items[vs] = None
        return True

    def discard(self, vs):
        self._items.pop(vs, None)

    def __contains__(self, vs):
        return vs in self._items

    def __iter__(self):
        return iter(list(self._items))

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, SolutionSet):
            return self._items.keys() == other._items.keys()
        if isinstance(other, (set, frozenset)):
            return set(self._items) == {o if isinstance(o, VertexSet) else VertexSet(o) for o in other}
        return NotImplemented

    def canonical(self):
        """Members sorted lexicographically by their ascending id sequence."""
        return sorted(self._items, key=VertexSet.sort_key)

    def as_tuples(self):
        return [vs.sort_key() for vs in self.canonical()]

    def containing(self, v):
        return SolutionSet(vs for vs in self._items if v in vs)

    def __repr__(self):
        return f"SolutionSet({self.as_tuples()})"


def _as_sub(G):
    if isinstance(G, Graph):
        return whole(G)
    return G


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sat(P, H):
    return P.sat_fn(H)


def is_max(P, H, G=None):
    """True iff ``H`` is in ``P`` and no single vertex of ``G`` extends it within ``P``.

    ``G`` may be a graph or an induced subgraph of ``H``'s parent (defaults
    to the whole parent).
    """
    U = _as_sub(G) if G is not None else whole(H.parent)
    if H.mask & ~U.mask:
        raise ContractError("H is not an induced subgraph of G")
    parent = H.parent
    m = H.mask
    if not P.holds(parent, m):
        return False
    for v in _bits(U.mask & ~m):
        if P.holds(parent, m | (1 << v)):
            return False
    return True


def almost_satisfies(P, G):
    """Smallest vertex ``v`` with ``G - v`` in ``P``, or None."""
    U = _as_sub(G)
    for v in _bits(U.mask):
        if P.holds(U.parent, U.mask & ~(1 << v)):
            return v
    return None


def _require_almost(P, U):
    w = almost_satisfies(P, U)
    if w is None:
        raise ContractError(f"graph on {list(U.vertices)} does not almost satisfy {P.name}")
    return w


def restricted_all(P, G):
    """All maximal P-subgraphs of a graph that almost satisfies ``P``."""
    U = _as_sub(G)
    w = _require_almost(P, U)
    if P.restricted_all_solver is not None:
        return P.restricted_all_solver(U, None, w)
    return generic_restricted(P, U)


def restricted_with_vertex(P, G, v_r):
    """Maximal P-subgraphs through ``v_r`` of a graph that almost satisfies ``P``."""
    U = _as_sub(G)
    if v_r not in U.vertices:
        raise ContractError(f"vertex {v_r} is not in the graph")
    w = _require_almost(P, U)
    if P.restricted_vertex_solver is not None:
        return P.restricted_vertex_solver(U, v_r, w)
    return generic_restricted(P, U, v_r)


def _obstruction(P, parent, mask):
    """Shrink a non-member ``mask`` to an inclusion-minimal non-member."""
    for v in _bits(mask):
        smaller = mask & ~(1 << v)
        if not P.holds(parent, smaller):
            mask = smaller
    return mask


def generic_restricted(P, G, v_r=None):
    """Exact maximal P-subgraphs of an arbitrary graph by top-down deletion.

    Works for any graph (the almost-satisfies precondition is not needed)
    and any property class; exponential in the worst case.  For hereditary
    properties only vertices of a minimal non-member are branched on, since
    every member inside the current set must miss one of them.
    """
    U = _as_sub(G)
    parent = U.parent
    required = 0
    if v_r is not None:
        if v_r not in U.vertices:
            raise ContractError(f"vertex {v_r} is not in the graph")
        required = 1 << v_r
    hereditary = P.pclass is PropertyClass.HEREDITARY
    found = []
    seen = set()
    stack = [U.mask]
    while stack:
        X = stack.pop()
        if X in seen:
            continue
        seen.add(X)
        if any(X & ~F == 0 for F in found):
            continue
        if P.holds(parent, X):
            found.append(X)
            continue
        branch = _obstruction(P, parent, X) if hereditary else X
        for v in sorted(_bits(branch & ~required), reverse=True):
            stack.append(X & ~(1 << v))
    kept = parent.kernels.maximal_filter(found)
    return SolutionSet(
        sorted((VertexSet.from_mask(m) for m in kept if m & required == required), key=VertexSet.sort_key)
    )
