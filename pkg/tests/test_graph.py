import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from graphconvex.errors import ParseError, UsageError
from graphconvex.graph import (FAMILIES, Graph, GraphFamily, VertexSet, add_universal_vertex,
                               clique_number, generate, graph_facts, parse_edge_list,
                               serialize_edge_list, simplicial_closure)

from oracles import to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


class TestParse:
    def test_path(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g == generate("path", 3)
        assert g.labels == {}

    def test_single_vertex(self):
        g = parse_edge_list("1 0")
        assert g.n == 1 and g.m == 0

    def test_index_out_of_range_names_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("3 1\n0 3")

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_edge_list("2 1\n1 1")

    @pytest.mark.parametrize("text", ["", "3\n", "a b\n", "2 1\n0 1 1\n", "2 2\n0 1\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)

    def test_duplicates_collapse_and_comments(self):
        g = parse_edge_list("# a comment\n3 3\n0 1\n1 0\n# another\n1 2\n")
        assert g.m == 2

    def test_labels_round_trip(self):
        g = add_universal_vertex(generate("cycle", 4))
        text = serialize_edge_list(g)
        assert "# label 4 u" in text
        back = parse_edge_list(text)
        assert back == g and back.labels == {4: "u"}

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g


class TestGenerate:
    def test_wheel4_is_k4(self):
        assert generate("wheel", 4) == generate("complete", 4)

    def test_cycle5_edges(self):
        assert set(generate("cycle", 5).edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}

    def test_complete6_edge_count(self):
        assert generate("complete", 6).m == 15

    @pytest.mark.parametrize("family,n", [("wheel", 3), ("cycle", 2), ("path", 0)])
    def test_below_minimum(self, family, n):
        with pytest.raises(UsageError):
            generate(family, n)

    def test_bad_p(self):
        with pytest.raises(UsageError):
            generate("gnp", 4, p=1.5)

    @pytest.mark.parametrize("family", FAMILIES)
    def test_deterministic(self, family):
        fam = GraphFamily(family, 7, 0.4, seed=11)
        assert generate(fam) == generate(fam)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_tree_is_tree(self, seed):
        t = generate("random-tree", 9, seed=seed)
        assert nx.is_tree(to_nx(t))

    @pytest.mark.parametrize("seed", range(20))
    def test_random_triangle_free(self, seed):
        g = generate("random-triangle-free", 10, p=0.7, seed=seed)
        assert graph_facts(g).is_triangle_free
        assert set(g.edges()) <= set(generate("gnp", 10, p=0.7, seed=seed).edges())

    @pytest.mark.parametrize("n", range(4, 10))
    def test_wheel_is_lifted_cycle(self, n):
        assert generate("wheel", n) == add_universal_vertex(generate("cycle", n - 1))


class TestTransforms:
    def test_lift_c5_is_w6(self):
        assert nx.is_isomorphic(to_nx(add_universal_vertex(generate("cycle", 5))),
                                nx.wheel_graph(6))

    def test_lift_k1(self):
        assert add_universal_vertex(Graph.empty(1)) == generate("complete", 2)

    def test_lift_empty3_is_star(self):
        g = add_universal_vertex(Graph.empty(3))
        assert nx.is_isomorphic(to_nx(g), nx.star_graph(3))
        assert g.labels[3] == "u"

    @given(graphs())
    def test_lift_diameter(self, g):
        assert graph_facts(add_universal_vertex(g)).diameter <= 2

    def test_lift_leaves_input(self):
        g = generate("path", 3)
        add_universal_vertex(g)
        assert g.n == 3 and g.m == 2

    def test_closure_path_unchanged(self):
        p4 = generate("path", 4)
        assert simplicial_closure(p4, 0, 3) == p4

    def test_closure_star_unchanged(self):
        star = generate("star", 4)
        assert simplicial_closure(star, 1, 2) == star

    def test_closure_c4(self):
        c4 = generate("cycle", 4)
        out = simplicial_closure(c4, 0, 2)
        assert set(out.edges()) - set(c4.edges()) == {(1, 3)}

    @given(graphs(), st.data())
    def test_closure_makes_simplicial(self, g, data):
        if g.n < 2:
            return
        x, y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
        out = simplicial_closure(g, x, y)
        for s in (x, y):
            nb = g.neighbors(s)
            assert all(out.has_edge(a, b) for a in nb for b in nb if a != b)
        assert set(g.edges()) <= set(out.edges())

    def test_closure_same_vertex(self):
        with pytest.raises(UsageError):
            simplicial_closure(generate("path", 3), 1, 1)


class TestFacts:
    def test_c6(self):
        f = graph_facts(generate("cycle", 6))
        assert f.is_bipartite and f.is_triangle_free and f.diameter == 3

    def test_k4(self):
        f = graph_facts(generate("complete", 4))
        assert not f.is_triangle_free and f.diameter == 1

    def test_two_edges(self):
        f = graph_facts(Graph.from_edges(4, [(0, 1), (2, 3)]))
        assert f.components == 2 and f.diameter == math.inf

    @given(graphs())
    def test_against_networkx(self, g):
        h = to_nx(g)
        f = graph_facts(g)
        assert f.is_bipartite == nx.is_bipartite(h)
        assert f.components == nx.number_connected_components(h)
        assert f.is_triangle_free == (sum(nx.triangles(h).values()) == 0)
        lengths = dict(nx.all_pairs_shortest_path_length(h))
        for u in range(g.n):
            for v in range(g.n):
                assert f.distances[u][v] == lengths[u].get(v, math.inf)

    @given(graphs())
    def test_clique_number(self, g):
        assert clique_number(g) == max(len(c) for c in nx.find_cliques(to_nx(g)))


class TestVertexSet:
    def test_ops(self):
        a, b = VertexSet({1, 2, 3}), VertexSet({3, 4})
        assert isinstance(a | b, VertexSet) and a | b == {1, 2, 3, 4}
        assert a & b == {3} and a - b == {1, 2}
        assert VertexSet.from_mask(a.mask) == a
        assert len(VertexSet.from_mask(0)) == 0


def test_asymmetric_rows_rejected():
    with pytest.raises(UsageError):
        Graph(2, [0b10, 0])
