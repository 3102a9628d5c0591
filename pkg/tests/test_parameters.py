import pytest
from hypothesis import given, settings, strategies as st

from graphconvex.convexity import hull, is_convex, is_general_position, iteration_trace
from graphconvex.errors import InfeasibleError, UsageError
from graphconvex.graph import Graph, GraphFamily, generate
from graphconvex.parameters import (brute_force_gp, closed_form, dissociation_number,
                                    gp_decision_xp, gp_number, iteration_time_graph,
                                    lema2_path_exists, tree_iteration_time_p3)

import oracles
from test_graph import graphs

KINDS = ["geodesic", "monophonic", "p3", "p3star"]

# v1=0 adjacent to a=2, b=3, v2=1; v2 adjacent to c=4
SPIDER = Graph.from_edges(5, [(0, 2), (0, 3), (0, 1), (1, 4)])


class TestIterationTime:
    def test_p3_c5(self):
        assert iteration_time_graph("p3", generate("cycle", 5)).value == 1

    def test_p3_k1(self):
        assert iteration_time_graph("p3", Graph.empty(1)).value == 0

    def test_spider(self):
        rep = iteration_time_graph("p3", SPIDER)
        assert rep.value == 2
        assert iteration_trace("p3", SPIDER, rep.witness).steps == 2

    def test_cap(self):
        with pytest.raises(InfeasibleError) as info:
            iteration_time_graph("p3", generate("path", 6), cap=5)
        assert info.value.cap == 5

    @settings(max_examples=40, deadline=None)
    @given(graphs(6), st.sampled_from(KINDS))
    def test_matches_oracle(self, g, kind):
        rep = iteration_time_graph(kind, g)
        assert rep.value == oracles.ti_graph(kind, g)
        assert iteration_trace(kind, g, rep.witness).steps == rep.value


class TestGeneralPositionNumber:
    @pytest.mark.parametrize("n,want", [(4, 4), (7, 3)])
    def test_wheels(self, n, want):
        assert gp_number("monophonic", generate("wheel", n)).value == want

    def test_k6(self):
        assert gp_number("monophonic", generate("complete", 6)).value == 6

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_tiny(self, kind, n):
        assert gp_number(kind, generate("complete", n) if n else Graph.empty(0)).value == n

    @pytest.mark.parametrize("family,n", [("path", 7), ("cycle", 8)])
    def test_two(self, family, n):
        assert gp_number("monophonic", generate(family, n)).value == 2

    def test_cap(self):
        with pytest.raises(InfeasibleError):
            gp_number("monophonic", generate("cycle", 13))

    @settings(max_examples=50, deadline=None)
    @given(graphs(7), st.sampled_from(KINDS))
    def test_matches_oracle(self, g, kind):
        rep = gp_number(kind, g)
        assert rep.value == oracles.gp(kind, g) == brute_force_gp(kind, g)
        assert len(rep.witness) == rep.value
        assert is_general_position(kind, g, rep.witness)


class TestDissociation:
    @pytest.mark.parametrize("g,want", [
        (generate("cycle", 6), 4),
        (Graph.empty(5), 5),
        (generate("complete", 4), 2),
    ])
    def test_examples(self, g, want):
        assert dissociation_number(g).value == want

    @settings(max_examples=60, deadline=None)
    @given(graphs(9))
    def test_equals_p3_gp(self, g):
        rep = dissociation_number(g)
        assert rep.value == oracles.dissociation(g)
        assert is_general_position("p3", g, rep.witness) and len(rep.witness) == rep.value
        if g.n <= 7:
            assert rep.value == gp_number("p3", g).value

    def test_cap(self):
        with pytest.raises(InfeasibleError):
            dissociation_number(generate("path", 10), cap=9)


class TestXP:
    def test_c6(self):
        dec = gp_decision_xp("p3", generate("cycle", 6), 4)
        assert dec and len(dec.witness) == 4

    @pytest.mark.parametrize("kind", KINDS)
    def test_zero(self, kind):
        assert gp_decision_xp(kind, generate("cycle", 5), 0)

    def test_c8(self):
        assert not gp_decision_xp("monophonic", generate("cycle", 8), 3)

    def test_k_above_n(self):
        assert not gp_decision_xp("p3", generate("path", 3), 4)

    def test_negative(self):
        with pytest.raises(UsageError):
            gp_decision_xp("p3", generate("path", 3), -1)


class TestTreeFormula:
    def test_star(self):
        assert tree_iteration_time_p3(generate("star", 4)) == 1

    def test_p5(self):
        assert tree_iteration_time_p3(generate("path", 5)) == 1

    def test_spider(self):
        assert tree_iteration_time_p3(SPIDER) == 2

    @pytest.mark.parametrize("g", [generate("cycle", 4), Graph.empty(3), generate("path", 2)])
    def test_not_a_tree(self, g):
        with pytest.raises(UsageError):
            tree_iteration_time_p3(g)

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_solver(self, seed):
        t = generate("random-tree", 3 + seed % 9, seed=seed)
        assert tree_iteration_time_p3(t) == iteration_time_graph("p3", t).value


class TestLema2:
    def test_spider(self):
        assert lema2_path_exists(SPIDER, {2, 3, 4}, 2)

    def test_convex_seed(self):
        g = generate("gnp", 7, 0.5, seed=2)
        s = hull("p3", g, {0, 1})
        assert is_convex("p3", g, s)
        assert not lema2_path_exists(g, s, 1)

    def test_k4(self):
        assert lema2_path_exists(generate("complete", 4), {0, 1}, 1)

    @settings(max_examples=80, deadline=None)
    @given(graphs(8), st.data())
    def test_necessary(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        steps = iteration_trace("p3", g, s).steps
        for k in range(1, steps + 1):
            assert lema2_path_exists(g, s, k)


class TestClosedForm:
    def test_examples(self):
        assert closed_form("geodesic", ("complete", 9), "ti") == 0
        assert closed_form("monophonic", ("wheel", 4), "gp_mc") == 4
        assert closed_form("p3", GraphFamily("cycle", 4), "ti") == 1

    @pytest.mark.parametrize("case", [("p3", ("complete", 3), "ti"),
                                      ("p3", ("gnp", 6), "ti"),
                                      ("geodesic", ("cycle", 6), "gp_mc"),
                                      ("monophonic", ("star", 6), "gp_mc")])
    def test_not_covered(self, case):
        assert closed_form(*case) is None

    def test_bad_parameter(self):
        with pytest.raises(UsageError):
            closed_form("p3", ("cycle", 5), "hull")

    @pytest.mark.parametrize("n", range(4, 8))
    @pytest.mark.parametrize("family", ["complete", "cycle", "path", "wheel"])
    def test_agrees_with_solvers(self, family, n):
        g = generate(family, n)
        for kind in ["geodesic", "monophonic", "p3"]:
            want = closed_form(kind, (family, n), "ti")
            if want is not None:
                assert iteration_time_graph(kind, g).value == want
        assert gp_number("monophonic", g).value == closed_form("monophonic", (family, n), "gp_mc")
