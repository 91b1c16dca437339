import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bchromatic import graph_core as gc


class TestGraphBasics:
    def test_from_edges_dedups_and_sorts(self):
        g = gc.Graph.from_edges(3, [(1, 0), (0, 1), (1, 2)])
        assert g.adjacency == ((1,), (0, 2), (1,))
        assert g.edge_count == 2
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            gc.Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            gc.Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            gc.Graph.from_edges(2, [(-1, 0)])

    def test_degree_and_neighbor_sets(self):
        g = gc.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert g.degrees() == (3, 1, 1, 1)
        assert g.max_degree() == 3
        assert g.neighbor_sets[0] == {1, 2, 3}
        assert g.has_edge(0, 2) and not g.has_edge(1, 2)

    def test_empty_graph(self):
        g = gc.Graph.from_edges(0, [])
        assert g.vertex_count == 0 and g.edge_count == 0
        assert g.max_degree() == 0


class TestEdgeListFormat:
    def test_round_trip(self):
        g = gc.generate_petersen()
        assert gc.parse_edge_list(gc.serialize_edge_list(g)) == g

    def test_parse_simple(self):
        g = gc.parse_edge_list("3 2\n0 1\n1 2\n")
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(gc.ParseError, match="line 1"):
            gc.parse_edge_list("nonsense\n")
        with pytest.raises(gc.ParseError, match="line 2"):
            gc.parse_edge_list("2 1\n0 x\n")
        with pytest.raises(gc.ParseError, match="line 3"):
            gc.parse_edge_list("3 2\n0 1\n")  # truncated
        err = None
        try:
            gc.parse_edge_list("2 1\n0 1\n0 1\n")
        except gc.ParseError as exc:
            err = exc
        assert err is not None and err.line == 3

    def test_parse_rejects_trailing_garbage(self):
        with pytest.raises(gc.ParseError):
            gc.parse_edge_list("2 1\n0 1\nextra junk\n")


class TestDimacsFormat:
    def test_parse_with_comments(self):
        text = "c a comment\np edge 3 2\ne 1 2\ne 2 3\n"
        g = gc.parse_dimacs(text)
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_errors(self):
        with pytest.raises(gc.ParseError):
            gc.parse_dimacs("e 1 2\np edge 2 1\n")  # edge before header
        with pytest.raises(gc.ParseError):
            gc.parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n")
        with pytest.raises(gc.ParseError):
            gc.parse_dimacs("p edge 2 1\nq 1 2\n")
        with pytest.raises(gc.ParseError):
            gc.parse_dimacs("p edge 2 1\ne 0 1\n")  # vertices are 1-based


class TestGenerators:
    def test_petersen_shape(self):
        g = gc.generate_petersen()
        assert g.vertex_count == 10 and g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))

    def test_complete_bipartite(self):
        g = gc.generate_complete_bipartite(3)
        assert g.vertex_count == 6 and g.edge_count == 9
        assert all(g.degree(v) == 3 for v in range(6))
        assert not g.has_edge(0, 1) and g.has_edge(0, 3)

    def test_cycle(self):
        g = gc.generate_cycle(5)
        assert g.edge_count == 5 and all(g.degree(v) == 2 for v in range(5))
        with pytest.raises(ValueError):
            gc.generate_cycle(2)

    def test_complete(self):
        g = gc.generate_complete(4)
        assert g.edge_count == 6

    def test_generalized_petersen_cube(self):
        g = gc.generate_generalized_petersen(4, 1)
        assert g.vertex_count == 8 and g.edge_count == 12
        assert all(g.degree(v) == 3 for v in range(8))

    def test_heawood(self):
        g = gc.generate_heawood()
        assert g.vertex_count == 14 and g.edge_count == 21
        assert all(g.degree(v) == 3 for v in range(14))

    def test_disjoint_union_offsets_second_block(self):
        g = gc.disjoint_union(gc.generate_cycle(3), gc.generate_cycle(3))
        assert g.vertex_count == 6
        assert g.has_edge(0, 1) and g.has_edge(3, 4) and not g.has_edge(2, 3)

    def test_remove_edges(self):
        g = gc.generate_cycle(4)
        h = gc.remove_edges(g, [(0, 1)])
        assert h.edge_count == 3 and not h.has_edge(0, 1)
        with pytest.raises(ValueError):
            gc.remove_edges(g, [(0, 2)])


class TestCubicGadgets:
    def test_bridge_pair_is_cubic_and_c4_free(self):
        from bchromatic import analysis

        g = gc.generate_cubic_bridge_pair()
        assert g.vertex_count == 24
        assert all(g.degree(v) == 3 for v in range(24))
        assert not analysis.contains_c4(g)
        diam, _ = analysis.diameter(g)
        assert diam >= 6

    @pytest.mark.parametrize("beads", [2, 3, 4])
    def test_chain_is_cubic_and_c4_free(self, beads):
        from bchromatic import analysis

        g = gc.generate_cubic_chain(beads)
        assert g.vertex_count == 10 * beads
        assert all(g.degree(v) == 3 for v in range(g.vertex_count))
        assert not analysis.contains_c4(g)

    def test_chain_needs_two_beads(self):
        with pytest.raises(ValueError):
            gc.generate_cubic_chain(1)


class TestRandomRegularC4Free:
    def test_feasibility_errors(self):
        with pytest.raises(ValueError):
            gc.generate_random_c4_free_regular(3, 9, 0)  # n*d odd
        with pytest.raises(ValueError):
            gc.generate_random_c4_free_regular(5, 4, 0)  # d >= n
        with pytest.raises(ValueError):
            gc.generate_random_c4_free_regular(4, 10, 0)  # below the n >= d^2-d+1 floor

    def test_impossible_small_case_raises_generation_error(self):
        with pytest.raises(gc.GenerationError):
            gc.generate_random_c4_free_regular(2, 4, 0)  # the only 2-regular n=4 graph is a 4-cycle

    def test_deterministic_per_seed(self):
        a = gc.generate_random_c4_free_regular(3, 16, 5)
        b = gc.generate_random_c4_free_regular(3, 16, 5)
        c = gc.generate_random_c4_free_regular(3, 16, 6)
        assert a == b
        assert a != c

    @pytest.mark.parametrize("d,n", [(3, 14), (3, 20), (4, 20), (5, 32), (6, 48)])
    def test_output_is_regular_and_c4_free(self, d, n):
        from bchromatic import analysis

        g = gc.generate_random_c4_free_regular(d, n, 1)
        assert analysis.is_regular(g) == d
        assert not analysis.contains_c4(g)

    def test_small_degrees_direct(self):
        g = gc.generate_random_c4_free_regular(2, 5, 0)
        assert all(g.degree(v) == 2 for v in range(5))
        g = gc.generate_random_c4_free_regular(1, 6, 0)
        assert all(g.degree(v) == 1 for v in range(6))
        g = gc.generate_random_c4_free_regular(0, 4, 0)
        assert g.edge_count == 0

    def test_budget_dataclass(self):
        b = gc.GenerationBudget(swap_attempts=10, restarts=2)
        assert b.swap_attempts == 10 and b.restarts == 2
        assert gc.DEFAULT_BUDGET.restarts == 12


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_serialize_parse_round_trip_random(data):
    n = data.draw(st.integers(min_value=0, max_value=12))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(possible), unique=True)) if possible else []
    g = gc.Graph.from_edges(n, edges)
    assert gc.parse_edge_list(gc.serialize_edge_list(g)) == g
