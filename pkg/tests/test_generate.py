import pytest

from pathcentral.generate import hub_digraph, layered_dag, random_digraph
from pathcentral.graph import dump_edge_list


class TestRandomDigraph:
    def test_no_self_loops(self):
        g = random_digraph(25, 0.5, seed=1)
        assert all(u != v for u, v in g.edges())

    def test_zero_probability_means_no_edges(self):
        assert random_digraph(10, 0.0, seed=1).edge_count == 0

    def test_full_probability_means_complete(self):
        g = random_digraph(6, 1.0, seed=1)
        assert g.edge_count == 6 * 5

    def test_seed_determinism(self):
        a = random_digraph(30, 0.2, seed=77)
        b = random_digraph(30, 0.2, seed=77)
        assert dump_edge_list(a) == dump_edge_list(b)
        c = random_digraph(30, 0.2, seed=78)
        assert dump_edge_list(a) != dump_edge_list(c)

    @pytest.mark.parametrize("n,p", [(0, 0.5), (5, -0.1), (5, 1.1)])
    def test_bad_parameters(self, n, p):
        with pytest.raises(ValueError):
            random_digraph(n, p)


class TestHubDigraph:
    def test_every_vertex_connected_both_ways(self):
        g = hub_digraph(60, seed=3)
        for v in g.vertices():
            assert g.out_degree(v) >= 1
            assert g.in_degree(v) >= 1

    def test_vertex_count_and_loop_freedom(self):
        g = hub_digraph(40, out_per_vertex=2, in_per_vertex=4, seed=5)
        assert g.vertex_count == 40
        assert all(u != v for u, v in g.edges())
        assert len(set(g.edges())) == g.edge_count

    def test_hubs_concentrate_degree(self):
        # preferential attachment: the core vertices end up with far more
        # edges than a typical late vertex
        g = hub_digraph(300, seed=9)
        degrees = sorted((g.in_degree(v) + g.out_degree(v) for v in g.vertices()),
                         reverse=True)
        assert degrees[0] > 4 * degrees[len(degrees) // 2]

    def test_seed_determinism(self):
        a = hub_digraph(50, seed=123)
        b = hub_digraph(50, seed=123)
        assert dump_edge_list(a) == dump_edge_list(b)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            hub_digraph(2)
        with pytest.raises(ValueError):
            hub_digraph(10, out_per_vertex=0)


class TestLayeredDag:
    def test_shape_and_rank_rule(self):
        layers, width = 5, 4
        g = layered_dag(layers, width, seed=2)
        assert g.vertex_count == layers * width
        for u, v in g.edges():
            assert v // width == u // width + 1

    def test_every_non_final_vertex_has_an_exit(self):
        g = layered_dag(6, 3, edge_prob=0.1, seed=8)
        for v in g.vertices():
            if v // 3 < 5:
                assert g.out_degree(v) >= 1
            else:
                assert g.out_degree(v) == 0

    def test_seed_determinism(self):
        a = layered_dag(4, 5, seed=0)
        b = layered_dag(4, 5, seed=0)
        assert dump_edge_list(a) == dump_edge_list(b)

    @pytest.mark.parametrize("layers,width,p", [(1, 3, 0.5), (3, 0, 0.5), (3, 3, 1.5)])
    def test_bad_parameters(self, layers, width, p):
        with pytest.raises(ValueError):
            layered_dag(layers, width, p)
