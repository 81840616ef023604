"""Directed graphs with an optional root, and their induced subgraphs.

Vertex sets are bitmasks over dense integer ids, wrapped in :class:`VertexSet`
so that iteration, equality and hashing are canonical.
"""

import enum
import io

from . import kernels
from .errors import ContractError, GraphParseError


class PropertyClass(enum.Enum):
    HEREDITARY = "hereditary"
    CONNECTED_HEREDITARY = "connected-hereditary"
    ROOTED_HEREDITARY = "rooted-hereditary"


class VertexSet:
    """Immutable set of vertex ids, iterated in ascending order."""

    __slots__ = ("mask",)

    def __init__(self, members=()):
        mask = 0
        for v in members:
            if v < 0:
                raise ContractError(f"negative vertex id {v}")
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask):
        vs = cls.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, v):
        return v >= 0 and (self.mask >> v) & 1 == 1

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self):
        return hash(self.mask)

    def __or__(self, other):
        return VertexSet.from_mask(self.mask | other.mask)

    def __and__(self, other):
        return VertexSet.from_mask(self.mask & other.mask)

    def __sub__(self, other):
        return VertexSet.from_mask(self.mask & ~other.mask)

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def sort_key(self):
        """Lexicographic key on the ascending member sequence."""
        return tuple(self)

    def __repr__(self):
        return "VertexSet({" + ", ".join(map(str, self)) + "})"

    def __reduce__(self):
        return (VertexSet.from_mask, (self.mask,))


def _bit(v):
    return 1 << v


class Graph:
    """Immutable directed graph on vertices ``0..n-1`` with an optional root."""

    __slots__ = ("n", "edges", "root", "out_adj", "und_adj", "full_mask", "_k")

    def __init__(self, n, edges=(), root=None):
        if n < 0:
            raise ContractError("vertex count must be non-negative")
        edges = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ContractError(f"self-loop on vertex {u}")
        if root is not None and not 0 <= root < n:
            raise ContractError(f"root {root} outside 0..{n - 1}")
        out = [0] * n
        und = [0] * n
        for u, v in edges:
            out[u] |= _bit(v)
            und[u] |= _bit(v)
            und[v] |= _bit(u)
        module, table = kernels.for_graph(n)
        s = object.__setattr__
        s(self, "n", n)
        s(self, "edges", edges)
        s(self, "root", root)
        s(self, "out_adj", table(out))
        s(self, "und_adj", table(und))
        s(self, "full_mask", (1 << n) - 1)
        s(self, "_k", module)

    @classmethod
    def undirected(cls, n, edges=(), root=None):
        """Build a graph where every listed pair becomes edges in both directions."""
        both = []
        for u, v in edges:
            both.append((u, v))
            both.append((v, u))
        return cls(n, both, root)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertices(self):
        return VertexSet.from_mask(self.full_mask)

    @property
    def kernels(self):
        return self._k

    def has_edge(self, u, v):
        return (u, v) in self.edges

    def adjacent(self, u, v):
        """Undirected adjacency: an edge in either direction."""
        return (self.und_adj[u] >> v) & 1 == 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.root) == (other.n, other.edges, other.root)

    def __hash__(self):
        return hash((self.n, self.edges, self.root))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)}, root={self.root})"

    def __reduce__(self):
        return (Graph, (self.n, sorted(self.edges), self.root))


class InducedSubgraph:
    """The subgraph of ``parent`` induced by ``vertices``.

    The root is the parent's root when it survives, otherwise absent.
    """

    __slots__ = ("parent", "vertices")

    def __init__(self, parent, vertices):
        if not isinstance(vertices, VertexSet):
            vertices = VertexSet(vertices)
        if vertices.mask & ~parent.full_mask:
            raise ContractError(f"{vertices!r} is not a subset of the parent's vertices")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "vertices", vertices)

    def __setattr__(self, name, value):
        raise AttributeError("InducedSubgraph is immutable")

    @property
    def mask(self):
        return self.vertices.mask

    @property
    def root(self):
        r = self.parent.root
        if r is not None and r in self.vertices:
            return r
        return None

    @property
    def edges(self):
        m = self.vertices.mask
        return frozenset((u, v) for u, v in self.parent.edges if (m >> u) & 1 and (m >> v) & 1)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, InducedSubgraph):
            return NotImplemented
        return self.vertices == other.vertices and self.parent == other.parent

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"InducedSubgraph({list(self.vertices)}, root={self.root})"


def induced(G, S):
    return InducedSubgraph(G, S)


def whole(G):
    return InducedSubgraph(G, G.vertices)


def extend(H, v):
    if not 0 <= v < H.parent.n:
        raise ContractError(f"vertex {v} is not in the parent graph")
    if v in H.vertices:
        return H
    return InducedSubgraph(H.parent, VertexSet.from_mask(H.mask | _bit(v)))


def union_sub(H, H2):
    if H.parent is not H2.parent and H.parent != H2.parent:
        raise ContractError("induced subgraphs of different graphs")
    return InducedSubgraph(H.parent, H.vertices | H2.vertices)


def delete(H, v):
    """``H - v``."""
    return InducedSubgraph(H.parent, VertexSet.from_mask(H.mask & ~_bit(v)))


def neighbor_mask(pclass, G, mask):
    """Bitmask form of :func:`neighbors`."""
    if pclass is PropertyClass.ROOTED_HEREDITARY:
        table = G.out_adj
    elif pclass is PropertyClass.CONNECTED_HEREDITARY:
        table = G.und_adj
    else:
        return G.full_mask & ~mask
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= table[low.bit_length() - 1]
        m ^= low
    return out & ~mask


def neighbors(pclass, H):
    """Vertices outside ``H`` that can extend it under the given property class.

    Undirected neighbours for connected-hereditary, out-neighbours for
    rooted-hereditary.  For hereditary properties every vertex outside ``H``
    counts, which is how the streaming engine handles them.
    """
    return VertexSet.from_mask(neighbor_mask(pclass, H.parent, H.mask))


def is_connected(H):
    return H.parent.kernels.is_connected(H.parent.und_adj, H.mask)


def is_rooted(H):
    r = H.root
    if r is None:
        return False
    G = H.parent
    return G.kernels.closure(G.out_adj, H.mask, _bit(r)) == H.mask


# -- text format -----------------------------------------------------------

def _ints(parts, lineno, count):
    if len(parts) != count:
        raise GraphParseError(f"expected {count} argument(s) after {parts[0]!r}", lineno)
    try:
        values = [int(p) for p in parts[1:]]
    except ValueError:
        raise GraphParseError(f"non-integer argument in {' '.join(parts)!r}", lineno) from None
    for x in values:
        if x < 0:
            raise GraphParseError(f"negative value {x}", lineno)
    return values


def parse_graph(text):
    """Parse the line-oriented graph format from a string or text stream."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    n = None
    root = None
    root_seen = False
    edges = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if n is None:
            if key != "v":
                raise GraphParseError("first declaration must be 'v <n>'", lineno)
            (n,) = _ints(parts, lineno, 2)
            continue
        if key == "v":
            raise GraphParseError("duplicate 'v' declaration", lineno)
        if key == "root":
            if root_seen:
                raise GraphParseError("duplicate root line", lineno)
            (root,) = _ints(parts, lineno, 2)
            if root >= n:
                raise GraphParseError(f"root {root} out of range 0..{n - 1}", lineno)
            root_seen = True
        elif key in ("e", "ue"):
            u, v = _ints(parts, lineno, 3)
            for x in (u, v):
                if x >= n:
                    raise GraphParseError(f"vertex id {x} out of range 0..{n - 1}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop on vertex {u}", lineno)
            edges.add((u, v))
            if key == "ue":
                edges.add((v, u))
        else:
            raise GraphParseError(f"unknown directive {key!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'v <n>' declaration")
    return Graph(n, edges, root)


def format_graph(G):
    """Serialize ``G``; symmetric edge pairs are written as ``ue`` lines."""
    lines = [f"v {G.n}"]
    if G.root is not None:
        lines.append(f"root {G.root}")
    for u, v in sorted(G.edges):
        if (v, u) in G.edges:
            if u < v:
                lines.append(f"ue {u} {v}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
