"""Two-stack enumeration of the maximal P-subgraphs through a fixed vertex.

Graphs still being extended live on Stack1; graphs whose every neighbour is
barred (known not to extend them) are finished and live on Stack2.  The core
:func:`_search` is a generator that yields each graph the moment it reaches
Stack2, which is what the streaming mode builds on.
"""

from .errors import ContractError
from .framework import SolutionSet, restricted_with_vertex
from .graph import InducedSubgraph, PropertyClass, VertexSet, neighbor_mask
from .stats import EngineStats


class StackEntry:
    """A candidate: its vertex mask and the mask of barred neighbours."""

    __slots__ = ("mask", "barred", "alive")

    def __init__(self, mask, barred=0):
        self.mask = mask
        self.barred = barred
        self.alive = True

    @property
    def vertices(self):
        return VertexSet.from_mask(self.mask)

    def __repr__(self):
        return f"StackEntry({list(self.vertices)}, barred={list(VertexSet.from_mask(self.barred))})"


class SolutionSink:
    """Deduplicating consumer shared by all per-vertex runs of a session."""

    def __init__(self, emit=None, limit=None):
        self.emit = emit
        self.limit = limit
        self.seen = set()

    @property
    def count(self):
        return len(self.seen)

    @property
    def full(self):
        return self.limit is not None and len(self.seen) >= self.limit

    def offer(self, vs):
        """Deliver ``vs`` unless already delivered or the limit is reached."""
        if vs in self.seen or self.full:
            return False
        self.seen.add(vs)
        if self.emit is not None:
            self.emit(vs)
        return True


def push_appropriate(P, entry, G, stack1, stack2, sink=None):
    """Put ``entry`` on Stack1 if it has an unbarred neighbour, else on Stack2.

    ``stack2`` maps masks to entries, so a graph already finished is not
    stored twice.  Returns True when the entry is new on Stack2.
    """
    if neighbor_mask(P.pclass, G, entry.mask) & ~entry.barred:
        stack1.append(entry)
        return False
    if entry.mask in stack2:
        return False
    stack2[entry.mask] = entry
    if sink is not None:
        sink.offer(entry.vertices)
    return True


def _pop_live(stack1):
    while stack1:
        e = stack1.pop()
        if e.alive:
            return e
    return None


def _check_seed(P, G, v_r):
    if not 0 <= v_r < G.n:
        raise ContractError(f"vertex {v_r} is not in the graph")
    if not P.holds(G, 1 << v_r):
        raise ContractError(f"G[{{{v_r}}}] does not satisfy {P.name}")


def _search(P, G, v_r, stats, check=False):
    """Yield every graph as it first reaches Stack2."""
    stack1 = []
    stack2 = {}
    iterations = 0
    last_arrival = 0

    def sat_mask(mask):
        return P.holds(G, mask)

    def arrived():
        nonlocal last_arrival
        stats.arrival_gaps.append(iterations - last_arrival)
        last_arrival = iterations
        stats.note_pool(len(stack1) + len(stack2))

    if push_appropriate(P, StackEntry(1 << v_r), G, stack1, stack2):
        arrived()
        yield VertexSet.from_mask(1 << v_r)
    while True:
        H = _pop_live(stack1)
        if H is None:
            break
        iterations += 1
        stats.outer_iterations += 1
        if check:
            _check_stacks(P, G, stack1, stack2)
        open_nbrs = neighbor_mask(P.pclass, G, H.mask) & ~H.barred
        v = (open_nbrs & -open_nbrs).bit_length() - 1
        grown = H.mask | (1 << v)
        if sat_mask(grown):
            if push_appropriate(P, StackEntry(grown), G, stack1, stack2):
                arrived()
                yield VertexSet.from_mask(grown)
            continue
        H.barred |= 1 << v
        stats.restricted_calls += 1
        U = InducedSubgraph(G, VertexSet.from_mask(grown))
        for Gp in restricted_with_vertex(P, U, v_r):
            gmask = Gp.mask
            if gmask == H.mask:
                continue
            inserted = False
            for Hp in [e for e in stack1 if e.alive]:
                if not Hp.alive:
                    continue
                merged = gmask | Hp.mask
                if sat_mask(merged):
                    Hp.alive = False
                    inserted = True
                    if push_appropriate(P, StackEntry(merged), G, stack1, stack2):
                        arrived()
                        yield VertexSet.from_mask(merged)
            if not inserted and any(gmask & ~m == 0 for m in stack2):
                inserted = True
            if not inserted:
                if push_appropriate(P, StackEntry(gmask), G, stack1, stack2):
                    arrived()
                    yield VertexSet.from_mask(gmask)
        if push_appropriate(P, H, G, stack1, stack2):
            arrived()
            yield H.vertices


def _check_stacks(P, G, stack1, stack2):
    for e in stack1:
        if e.alive and not neighbor_mask(P.pclass, G, e.mask) & ~e.barred:
            raise AssertionError(f"{e!r} on Stack1 has no open neighbour")
    for m, e in stack2.items():
        if neighbor_mask(P.pclass, G, m) & ~e.barred:
            raise AssertionError(f"{e!r} on Stack2 has an open neighbour")
    for e in [*stack1, *stack2.values()]:
        if e.barred & ~neighbor_mask(P.pclass, G, e.mask):
            raise AssertionError(f"{e!r} bars a non-neighbour")


def _require_vertex_class(P):
    if P.pclass is PropertyClass.HEREDITARY:
        raise ContractError(f"{P.name} is hereditary; use gen_hered or enumerate_incremental")


def gen_with_vertex(P, G, v_r, sink=None, stats=None, check=False):
    """Maximal P-subgraphs of ``G`` that contain ``v_r``.

    With ``check=True`` the stack invariants are asserted at every loop head.
    """
    _require_vertex_class(P)
    _check_seed(P, G, v_r)
    stats = stats if stats is not None else EngineStats()
    stats.start()
    out = SolutionSet()
    for vs in _search(P, G, v_r, stats, check):
        out.add(vs)
        if sink is not None:
            sink.offer(vs)
            if sink.full:
                break
    stats.stop()
    stats.emissions = len(out)
    return out


def _seed_vertices(P, G):
    if P.pclass is PropertyClass.ROOTED_HEREDITARY:
        r = G.root
        candidates = [] if r is None else [r]
    else:
        candidates = range(G.n)
    return [v for v in candidates if P.holds(G, 1 << v)]


def enumerate_incremental(P, G, k=None, sink=None, stats=None):
    """Stream distinct maximal P-subgraphs of ``G`` as soon as they are found.

    Runs the two-stack search from every admissible start vertex (only the
    root for rooted-hereditary properties; every vertex otherwise, with all
    outside vertices counting as neighbours for hereditary ones) and stops
    after ``k`` solutions when ``k`` is given.
    """
    if sink is None:
        sink = SolutionSink(limit=k)
    elif k is not None:
        sink.limit = k if sink.limit is None else min(k, sink.limit)
    stats = stats if stats is not None else EngineStats()
    if sink.full:
        return
    stats.start()
    last = stats.outer_iterations
    try:
        seeds = _seed_vertices(P, G)
        if not seeds and P.pclass is PropertyClass.HEREDITARY:
            empty = VertexSet()
            if P.sat_fn(InducedSubgraph(G, empty)) and sink.offer(empty):
                stats.emissions += 1
                stats.emission_gaps.append(0)
                yield empty
            return
        for v in seeds:
            for vs in _search(P, G, v, stats):
                if sink.offer(vs):
                    stats.emissions += 1
                    stats.emission_gaps.append(stats.outer_iterations - last)
                    last = stats.outer_iterations
                    stats.stop()
                    yield vs
                    stats.start()
                    if sink.full:
                        return
    finally:
        stats.stop()


def gen_all_connected(P, G, sink=None, stats=None):
    """All maximal P-subgraphs of ``G`` for a connected-hereditary ``P``."""
    if P.pclass is not PropertyClass.CONNECTED_HEREDITARY:
        raise ContractError(f"{P.name} is not connected-hereditary")
    return SolutionSet(enumerate_incremental(P, G, sink=sink, stats=stats))


def gen_all_rooted(P, G, sink=None, stats=None):
    """All maximal P-subgraphs of ``G`` for a rooted-hereditary ``P``."""
    if P.pclass is not PropertyClass.ROOTED_HEREDITARY:
        raise ContractError(f"{P.name} is not rooted-hereditary")
    return SolutionSet(enumerate_incremental(P, G, sink=sink, stats=stats))
