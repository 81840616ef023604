import pytest
from hypothesis import given, settings

from conftest import digraphs, undirected_graphs
from maxsub.errors import ContractError
from maxsub.framework import (
    SolutionSet,
    almost_satisfies,
    generic_restricted,
    is_max,
    restricted_all,
    restricted_with_vertex,
    sat,
)
from maxsub.graph import Graph, InducedSubgraph, VertexSet, induced, whole
from maxsub.oracle import brute_force_all
from maxsub.properties import (
    BIPARTITE,
    CATALOG,
    CLIQUE,
    CONNECTED_BIPARTITE,
    INDEPENDENT_SET,
    make_G2,
)


def sets(*groups):
    return {VertexSet(g) for g in groups}


class TestSolutionSet:
    def test_deduplicates_and_keeps_order(self):
        S = SolutionSet([[2], [0, 1], [2]])
        assert len(S) == 2
        assert [list(v) for v in S] == [[2], [0, 1]]
        assert not S.add([0, 1])

    def test_equality_ignores_order(self):
        assert SolutionSet([[1], [0]]) == SolutionSet([[0], [1]])
        assert SolutionSet([[1], [0]]) == sets([0], [1])

    def test_canonical_and_containing(self):
        S = SolutionSet([[1, 2], [0, 3], [0]])
        assert S.as_tuples() == [(0,), (0, 3), (1, 2)]
        assert S.containing(0) == sets([0, 3], [0])

    def test_discard(self):
        S = SolutionSet([[1]])
        S.discard(VertexSet([1]))
        S.discard(VertexSet([5]))
        assert len(S) == 0


class TestSat:
    def test_triangle_is_clique(self, triangle):
        assert sat(CLIQUE, whole(triangle))

    def test_empty_graph_is_clique(self, triangle):
        assert sat(CLIQUE, induced(triangle, []))

    def test_isolated_pair_not_connected_bipartite(self):
        assert not sat(CONNECTED_BIPARTITE, whole(Graph(2)))

    @given(digraphs())
    @settings(max_examples=60)
    def test_holds_agrees_with_sat_fn(self, G):
        for P in CATALOG.values():
            for mask in range(0, 1 << G.n, 3):
                H = InducedSubgraph(G, VertexSet.from_mask(mask))
                assert P.holds(G, mask) == P.sat_fn(H)


class TestIsMax:
    def test_whole_triangle(self, triangle):
        assert is_max(CLIQUE, whole(triangle), triangle)

    def test_extendable(self, path3):
        assert not is_max(INDEPENDENT_SET, induced(path3, [0]), path3)

    def test_maximal(self, path3):
        assert is_max(INDEPENDENT_SET, induced(path3, [0, 2]), path3)

    def test_non_member_is_not_maximal(self, triangle):
        assert not is_max(INDEPENDENT_SET, induced(triangle, [0, 1]), triangle)

    def test_relative_to_induced_subgraph(self, path3):
        H = induced(path3, [0])
        assert is_max(INDEPENDENT_SET, H, induced(path3, [0, 1]))

    def test_h_must_lie_inside_g(self, path3):
        with pytest.raises(ContractError):
            is_max(INDEPENDENT_SET, induced(path3, [0, 2]), induced(path3, [0, 1]))

    @pytest.mark.parametrize("P", list(CATALOG.values()), ids=lambda P: P.name)
    def test_single_vertex_test_matches_inclusion(self, P):
        # one-vertex extension decides maximality for every catalog class
        for G in undirected_graphs(4):
            ref = brute_force_all(P, G)
            for mask in range(1 << G.n):
                H = InducedSubgraph(G, VertexSet.from_mask(mask))
                assert is_max(P, H, G) == (H.vertices in ref)


class TestAlmostSatisfies:
    def test_triangle_bipartite(self, triangle):
        assert almost_satisfies(BIPARTITE, triangle) == 0

    def test_single_vertex_clique(self):
        assert almost_satisfies(CLIQUE, Graph(1)) == 0

    def test_two_triangles_not_bipartite(self):
        G = Graph.undirected(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert almost_satisfies(BIPARTITE, G) is None

    def test_returns_smallest_witness(self, apex):
        # deleting 2 leaves the clique {0,1,3}; deleting 3 leaves {0,1,2}
        assert almost_satisfies(CLIQUE, apex) == 2

    def test_on_induced_subgraph(self, apex):
        assert almost_satisfies(CLIQUE, induced(apex, [0, 1, 2])) == 0


class TestRestricted:
    def test_clique_apex(self, apex):
        assert restricted_all(CLIQUE, apex) == sets([0, 1, 2], [0, 1, 3])

    def test_independent_edge(self):
        G = Graph.undirected(2, [(0, 1)])
        assert restricted_all(INDEPENDENT_SET, G) == sets([0], [1])

    def test_bipartite_g2_1(self):
        # w = 0, v1 = 1, u1 = 2
        assert restricted_all(BIPARTITE, make_G2(1)) == sets([1, 2], [0, 1], [0, 2])

    def test_with_vertex_clique(self, apex):
        assert restricted_with_vertex(CLIQUE, apex, 2) == sets([0, 1, 2])

    def test_with_vertex_independent(self):
        G = Graph.undirected(2, [(0, 1)])
        assert restricted_with_vertex(INDEPENDENT_SET, G, 0) == sets([0])

    def test_precondition(self):
        G = Graph.undirected(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(ContractError):
            restricted_all(BIPARTITE, G)
        with pytest.raises(ContractError):
            restricted_with_vertex(BIPARTITE, G, 0)

    def test_vertex_must_be_present(self, apex):
        with pytest.raises(ContractError):
            restricted_with_vertex(CLIQUE, induced(apex, [0, 1, 2]), 3)


class TestGeneric:
    def test_triangle_bipartite(self, triangle):
        assert generic_restricted(BIPARTITE, triangle) == sets([0, 1], [0, 2], [1, 2])

    def test_already_member(self, path3):
        assert generic_restricted(BIPARTITE, path3) == sets([0, 1, 2])

    def test_required_vertex(self, triangle):
        assert generic_restricted(BIPARTITE, triangle, 0) == sets([0, 1], [0, 2])

    def test_output_sorted(self, triangle):
        assert [list(v) for v in generic_restricted(BIPARTITE, triangle)] == [[0, 1], [0, 2], [1, 2]]

    @given(digraphs(max_n=7))
    @settings(max_examples=120)
    def test_equals_oracle_on_any_graph(self, G):
        for P in CATALOG.values():
            ref = brute_force_all(P, G)
            assert generic_restricted(P, G) == ref
            for v in range(G.n):
                assert generic_restricted(P, G, v) == ref.containing(v)


@pytest.mark.parametrize("P", [CLIQUE, INDEPENDENT_SET, BIPARTITE], ids=lambda P: P.name)
def test_hereditary_closure(P):
    # every induced subgraph of a member is a member
    for G in undirected_graphs(4):
        for mask in range(1 << G.n):
            if P.holds(G, mask):
                sub = mask
                while sub:
                    sub = (sub - 1) & mask
                    assert P.holds(G, sub)


@pytest.mark.parametrize("P", list(CATALOG.values()), ids=lambda P: P.name)
def test_every_member_extends_to_a_maximal_one(P):
    # growing one vertex at a time from any member ends in a maximal member
    for G in undirected_graphs(4):
        ref = brute_force_all(P, G)
        for mask in range(1 << G.n):
            if not P.holds(G, mask):
                continue
            grown = True
            while grown:
                grown = False
                for v in range(G.n):
                    if not mask >> v & 1 and P.holds(G, mask | 1 << v):
                        mask |= 1 << v
                        grown = True
                        break
            assert VertexSet.from_mask(mask) in ref
