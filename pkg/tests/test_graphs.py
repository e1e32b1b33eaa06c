import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eicount.graphs import (Graph, Partition, line_graph, make_pattern,
                            parse_graph, quotient, serialize_graph, subdivide,
                            vertex_cover_number)


def random_graph_strategy(max_n=7, p=0.5):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = list(itertools.combinations(range(n), 2))
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Graph(n, [e for e, keep in zip(pairs, mask) if keep])
    return build()


class TestConstructors:
    def test_windmill(self):
        g = make_pattern("W", 3)
        assert (g.n, g.m) == (7, 9)

    def test_substar(self):
        g = make_pattern("SS", 2)
        assert (g.n, g.m) == (5, 4)

    def test_collar(self):
        g = make_pattern("collar", 2)
        assert (g.n, g.m) == (10, 15)
        assert g.meta["u"] == 0 and g.meta["v"] == 9

    def test_barbed_wire_counts(self):
        for ell in range(1, 4):
            g = make_pattern("barbed", ell)
            assert (g.n, g.m) == (4 * ell + 3, 4 * ell + 2)

    def test_weight_gadget_sizes(self):
        g1 = make_pattern("Gi", 1)
        assert (g1.n, g1.m) == (2, 1)
        g2 = make_pattern("Gi", 2)
        assert (g2.n, g2.m) == (6, 6)
        assert len(g2.meta["marked"]) == 2

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            make_pattern("frobnicate", 2)
        with pytest.raises(ValueError):
            make_pattern("C", 2)

    def test_invariants_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 1)], color={(0, 1): 3}, k=2)
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 2)], weight={(0, 1): 1})


class TestLineGraph:
    def test_p2_gives_k2(self):
        assert line_graph(make_pattern("P", 2)) == make_pattern("K", 2)

    def test_c4_self(self):
        lg = line_graph(make_pattern("C", 4))
        assert (lg.n, lg.m) == (4, 4)

    @given(random_graph_strategy())
    @settings(max_examples=60, deadline=None)
    def test_size_formula(self, g):
        lg = line_graph(g)
        assert lg.n == g.m
        assert lg.m == sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in range(g.n))


class TestSubdivide:
    def test_k2_becomes_path(self):
        from eicount.oracles import is_isomorphic
        s = subdivide(make_pattern("K", 2), 3)
        assert (s.n, s.m) == (5, 4)
        assert is_isomorphic(s, make_pattern("P", 4))

    def test_counts(self):
        g = make_pattern("K", 4)
        s = subdivide(g, 2)
        assert s.n == g.n + 2 * g.m
        assert s.m == 3 * g.m

    def test_components_and_cycles_preserved(self):
        g = Graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
        s = subdivide(g, 2)
        assert len(s.components()) == len(g.components())

    def test_colored_needs_policy(self):
        g = Graph(2, [(0, 1)], color={(0, 1): 1}, k=1)
        with pytest.raises(ValueError):
            subdivide(g, 1)
        s = subdivide(g, 1, color_policy=lambda e, j: j + 1)
        assert s.color[(0, 2)] == 1 and s.color[(1, 2)] == 2


class TestQuotient:
    def test_singletons_identity(self):
        for g in [make_pattern("K", 4), make_pattern("C", 5), Graph(3, [])]:
            q = quotient(g, Partition.singletons(g.n))
            assert not q.degenerate and q.edge_injective and q.graph == g

    def test_wedge_endpoint_merge(self):
        p2 = make_pattern("P", 2)  # 0-1-2
        q = quotient(p2, Partition(3, [[0, 2], [1]]))
        assert not q.degenerate and not q.edge_injective

    def test_loop_degenerate(self):
        q = quotient(make_pattern("K", 2), Partition(2, [[0, 1]]))
        assert q.degenerate and q.graph is None


class TestVertexCover:
    def test_k3(self):
        assert vertex_cover_number(make_pattern("K", 3)) == 2

    def test_weak_matching(self):
        assert vertex_cover_number(make_pattern("kK2", 3), weak=True) == 0

    def test_weak_wedges(self):
        assert vertex_cover_number(make_pattern("kP2", 3), weak=True) == 3

    @given(random_graph_strategy(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_weak_le_exact(self, g):
        assert vertex_cover_number(g, weak=True) <= vertex_cover_number(g)

    @given(random_graph_strategy(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_weak_equals_exact_after_removal(self, g):
        drop = {v for comp in g.components()
                if len(comp) == 2 and g.has_edge(comp[0], comp[1]) for v in comp}
        stripped = g.remove_vertices(drop)
        assert vertex_cover_number(g, weak=True) == vertex_cover_number(stripped)


class TestTextFormat:
    def test_k2(self):
        assert parse_graph("v 2\ne 0 1") == make_pattern("K", 2)

    def test_colored(self):
        g = parse_graph("v 3\ne 0 1 c=1\ne 1 2 c=2")
        assert g.color == {(0, 1): 1, (1, 2): 2}

    def test_duplicate_edge(self):
        with pytest.raises(ValueError):
            parse_graph("v 2\ne 0 1\ne 1 0")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            parse_graph("v 2\ne 0 5")

    def test_comments_and_weights(self):
        g = parse_graph("# hello\nv 2\ne 0 1 c=1 w=7\n")
        assert g.weight == {(0, 1): 7}

    @given(random_graph_strategy())
    @settings(max_examples=50, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g

    def test_serialize_stable(self):
        g = make_pattern("collar", 1)
        text = serialize_graph(g)
        assert serialize_graph(parse_graph(text)) == text
