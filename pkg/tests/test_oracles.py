import itertools
import random

import pytest

from eicount import oracles as O
from eicount.config import CapExceeded
from eicount.graphs import Graph, line_graph, make_pattern

K2 = make_pattern("K", 2)
K3 = make_pattern("K", 3)
K4 = make_pattern("K", 4)
P2 = make_pattern("P", 2)
EMPTY = Graph(0, [])


def rand_graph(rng, n, p=0.5):
    return Graph(n, [e for e in itertools.combinations(range(n), 2)
                     if rng.random() < p])


class TestHomFamily:
    def test_hom_edge(self):
        for g in [K3, K4, make_pattern("C", 5)]:
            assert O.count_hom(K2, g) == 2 * g.m

    def test_hom_vertex(self):
        assert O.count_hom(make_pattern("K", 1), K4) == 4

    def test_hom_wedge_triangle(self):
        assert O.count_hom(P2, K3) == 12

    def test_emb_automorphisms(self):
        assert O.count_emb(K3, K3) == 6

    def test_emb_claw(self):
        assert O.count_emb(make_pattern("Kab", 1, 3), K4) == 24

    def test_edginj_examples(self):
        assert O.count_edginj(K2, K4) == 12
        assert O.count_edginj(P2, K3) == 6
        assert O.count_edginj(EMPTY, K4) == 1

    def test_sandwich(self):
        rng = random.Random(1)
        for _ in range(30):
            h = rand_graph(rng, rng.randrange(1, 6))
            g = rand_graph(rng, rng.randrange(1, 7))
            emb, einj, hom = O.count_emb(h, g), O.count_edginj(h, g), O.count_hom(h, g)
            assert emb <= einj <= hom

    def test_cliques_windmills_bicliques_embed(self):
        # edge-injective maps from these patterns are automatically
        # vertex-injective
        rng = random.Random(2)
        pats = [make_pattern("K", a) for a in (2, 3, 4)]
        pats += [make_pattern("Kab", a, b) for a in (1, 2) for b in (2, 3)]
        pats += [make_pattern("W", k) for k in (1, 2)]
        for h in pats:
            for _ in range(4):
                g = rand_graph(rng, 6)
                assert O.count_edginj(h, g) == O.count_emb(h, g)

    def test_cap(self):
        # beyond the unconditional pattern cap AND the search-volume budget
        with pytest.raises(CapExceeded):
            O.count_hom(make_pattern("K", 12), make_pattern("K", 12))


class TestWeighted:
    def test_all_ones_match_unweighted(self):
        rng = random.Random(3)
        for _ in range(10):
            g = rand_graph(rng, 5)
            gw = Graph(g.n, g.edges, weight={e: 1 for e in g.edges})
            assert O.count_edginj_weighted(P2, gw) == O.count_edginj(P2, g)

    def test_single_edge(self):
        gw = Graph(2, [(0, 1)], weight={(0, 1): 5})
        assert O.count_edginj_weighted(K2, gw) == 10

    def test_triangle_into_weighted_k4(self):
        # every K4 edge lies in two triangles: sum of products is 2*2 + 2*1
        w = {e: (2 if e == (0, 1) else 1) for e in K4.edges}
        gw = Graph(4, K4.edges, weight=w)
        assert O.count_edginj_weighted(make_pattern("C", 3), gw) == 2 * 3 * 6

    def test_missing_weights(self):
        with pytest.raises(ValueError):
            O.count_edginj_weighted(K2, K4)


class TestMatchings:
    def test_c4(self):
        assert O.count_matchings(make_pattern("C", 4), 2) == 2

    def test_empty_matching(self):
        assert O.count_matchings(K4, 0) == 1

    def test_colorful_requires_colors(self):
        with pytest.raises(ValueError):
            O.count_matchings(K4, 2, colorful=True)

    def test_colorful_c4(self):
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)],
                   color={(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2}, k=2)
        # alternating colors leave only same-color disjoint pairs
        assert O.count_matchings(c4, 2, colorful=True) == 0
        c4b = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)],
                    color={(0, 1): 1, (1, 2): 1, (2, 3): 2, (0, 3): 2}, k=2)
        assert O.count_matchings(c4b, 2, colorful=True) == 2

    def test_colorful_inclusion_exclusion(self):
        # the identity behind the color-removal reduction
        rng = random.Random(4)
        for _ in range(10):
            n, k = rng.randrange(3, 6), rng.randrange(1, 4)
            edges = [e for e in itertools.combinations(range(n), 2)
                     if rng.random() < 0.6]
            if len(edges) < k:
                continue
            color = {e: rng.randrange(1, k + 1) for e in edges}
            if len(set(color.values())) < k:
                continue
            g = Graph(n, edges, color=color, k=k)
            want = O.count_matchings(g, k, colorful=True)
            got = 0
            for r in range(k + 1):
                for sub in itertools.combinations(range(1, k + 1), r):
                    keep = [e for e in edges if color[e] in sub]
                    got += (-1) ** (k - r) * O.count_matchings(Graph(n, keep), k)
            assert got == want

    def test_wedge_packings_vs_line_matchings(self):
        rng = random.Random(5)
        for _ in range(8):
            g = rand_graph(rng, 6)
            for k in range(0, 4):
                direct = O.count_edginj(make_pattern("kP2", k), g) if k else 1
                assert direct == O.count_wedge_packings(g, k)


class TestPerfectMatchings:
    def test_k4(self):
        assert O.count_perfect_matchings(K4) == 3

    def test_odd_order(self):
        assert O.count_perfect_matchings(K3) == 0

    def test_collar(self):
        c = make_pattern("collar", 2)
        assert O.count_perfect_matchings(c) == 1
        stripped = c.remove_vertices([c.meta["u"], c.meta["v"]])
        assert O.count_perfect_matchings(stripped) == 9


class TestOddEdgeSets:
    def test_k4(self):
        assert O.count_odd_edge_sets_enum(K4) == 8
        assert O.count_odd_edge_sets_enum(K4, by_cardinality=True) == \
            [0, 0, 3, 4, 0, 0, 1]

    def test_k2_k3(self):
        assert O.count_odd_edge_sets_enum(K2) == 1
        assert O.count_odd_edge_sets_enum(K3) == 0


class TestDerived:
    def test_edge_disjoint_cycles(self):
        assert O.count_edge_disjoint(K4, 3, "cycle") == 4
        assert O.count_edge_disjoint(K3, 4, "cycle") == 0

    def test_edge_disjoint_paths(self):
        assert O.count_edge_disjoint(K3, 2, "path") == 3

    def test_partition_sum_examples(self):
        assert O.count_edginj_via_partition_sum(K2, K4) == 2 * K4.m
        assert O.count_edginj_via_partition_sum(P2, K3) == 6

    def test_partition_sum_random(self):
        rng = random.Random(6)
        for _ in range(25):
            h = rand_graph(rng, rng.randrange(1, 6))
            g = rand_graph(rng, rng.randrange(1, 7))
            assert O.count_edginj_via_partition_sum(h, g) == O.count_edginj(h, g)


class TestIsomorphism:
    def test_c4_k22(self):
        assert O.is_isomorphic(make_pattern("C", 4), make_pattern("Kab", 2, 2))

    def test_k3_p2(self):
        assert not O.is_isomorphic(K3, P2)

    def test_line_of_barbed_wire(self):
        for ell in (1, 2, 3):
            assert O.is_isomorphic(line_graph(make_pattern("barbed", ell)),
                                   make_pattern("collar", ell))
