import random
from fractions import Fraction
from math import comb

import pytest

from eicount.exact import (Polynomial, falling_factorial, gf2_solution_count,
                           interpolate, multinomial, plant_polynomials,
                           recover_unknowns, required_inputs, sigma_expand,
                           solve_rational)
from eicount.graphs import make_pattern
from eicount.oracles import count_odd_edge_sets_enum


class TestFallingFactorial:
    def test_scalar(self):
        assert falling_factorial(5, 2) == 20
        assert falling_factorial(Fraction(7, 2), 0) == 1

    def test_polynomial(self):
        y = Polynomial.x()
        assert falling_factorial(y - 1, 2).coeffs == (2, -3, 1)


class TestInterpolate:
    def test_constant(self):
        assert interpolate([(0, 1), (1, 1)]).coeffs == (1,)

    def test_square(self):
        assert interpolate([(0, 0), (1, 1), (2, 4)]).coeffs == (0, 0, 1)

    def test_duplicate_x(self):
        with pytest.raises(ValueError):
            interpolate([(1, 0), (1, 1)])

    def test_round_trip(self):
        rng = random.Random(0)
        for _ in range(20):
            coeffs = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
                      for _ in range(rng.randrange(1, 11))]
            p = Polynomial(coeffs)
            pts = [(x, p(x)) for x in range(len(coeffs))]
            assert interpolate(pts) == p


class TestSolve:
    def test_identity(self):
        assert solve_rational([[1, 0], [0, 1]], [3, 4]) == [3, 4]

    def test_vandermonde(self):
        sol = solve_rational([[1, 0], [1, 1]], [2, 5])
        assert sol == [2, 3]

    def test_random_consistency(self):
        rng = random.Random(1)
        for _ in range(15):
            n = 5
            a = [[Fraction(rng.randrange(-4, 5)) for _ in range(n)] for _ in range(n)]
            b = [Fraction(rng.randrange(-4, 5)) for _ in range(n)]
            try:
                x = solve_rational(a, b)
            except ValueError:
                continue
            for row, rhs in zip(a, b):
                assert sum(c * v for c, v in zip(row, x)) == rhs

    def test_singular(self):
        with pytest.raises(ValueError):
            solve_rational([[1, 1], [2, 2]], [1, 2])


class TestSigmaExpand:
    def test_trivial(self):
        assert sigma_expand(2, 2) == [Polynomial.const(1)]

    def test_degree_one(self):
        s = sigma_expand(3, 2)
        assert s[0].coeffs == (1,)
        assert s[1].coeffs == (-1, -2)   # -(2t+1)
        assert s[2].coeffs == (0, 1, 1)  # t^2+t

    def test_leading_coefficients(self):
        for gap in range(0, 5):
            sigs = sigma_expand(gap + 2, 2)
            for i, s in enumerate(sigs):
                assert s.degree <= i
                assert s.coeff(i) == (-1) ** i * comb(2 * gap, i)

    def test_reconstructs_falling_factorial(self):
        # substituting a concrete t must reproduce (y-t)_{2(r-k)}
        y = Polynomial.x()
        for r, k, t in [(3, 1, 0), (4, 2, 3), (5, 2, 1)]:
            sigs = sigma_expand(r, k)
            d = 2 * (r - k)
            rebuilt = Polynomial()
            for i, s in enumerate(sigs):
                rebuilt = rebuilt + s(t) * Polynomial([0] * (d - i) + [1])
            assert rebuilt == falling_factorial(y - t, d)


class TestRecovery:
    def test_k0(self):
        assert recover_unknowns(0, plant_polynomials({(0, 0): 7},
                                                     required_inputs(0))) == [7]

    def test_k1_example(self):
        ps = plant_polynomials({(0, 1): 2, (1, 0): 3}, required_inputs(1))
        assert recover_unknowns(1, ps) == [2, 3]

    def test_planted_instances(self):
        rng = random.Random(2)
        for trial in range(30):
            k = rng.randrange(0, 5)
            a = {}
            for tot in range(required_inputs(k) + 1):
                for t in range(tot + 1):
                    a[(t, tot - t)] = rng.randrange(0, 51)
            ps = plant_polynomials(a, required_inputs(k))
            got = recover_unknowns(k, ps)
            assert got == [a[(t, k - t)] for t in range(k + 1)]

    def test_not_enough_inputs(self):
        with pytest.raises(ValueError):
            recover_unknowns(2, plant_polynomials({(0, 0): 1}, 3))

    def test_moment_matrix_degrees_distinct(self):
        # column polynomials of the per-level system have pairwise distinct
        # degrees level+1-i, which is what makes the system solvable
        y = Polynomial.x()
        for level in range(1, 9):
            degs = set()
            for i in range(level // 2 + 1):
                q = Polynomial.const(1)
                # C(2(r-i), level-2i) * C(r, i) as a polynomial in r
                for j in range(level - 2 * i):
                    q = q * (2 * (y - i) - j)
                for j in range(i):
                    q = q * (y - j)
                degs.add(q.degree)
            assert len(degs) == level // 2 + 1


class TestGF2:
    def test_empty_system(self):
        assert gf2_solution_count([], [], 5) == 32

    def test_zero_row_inconsistent(self):
        assert gf2_solution_count([0], [1], 3) == 0

    def test_k4_incidence(self):
        k4 = make_pattern("K", 4)
        rows = [0] * 4
        for i, (u, v) in enumerate(k4.edges):
            rows[u] |= 1 << i
            rows[v] |= 1 << i
        assert gf2_solution_count(rows, [1] * 4, 6) == 8

    def test_matches_enumeration(self):
        import itertools
        from eicount.graphs import Graph
        rng = random.Random(3)
        for _ in range(15):
            n = rng.randrange(2, 7)
            g = Graph(n, [e for e in itertools.combinations(range(n), 2)
                          if rng.random() < 0.5])
            rows = [0] * n
            for i, (u, v) in enumerate(g.edges):
                rows[u] |= 1 << i
                rows[v] |= 1 << i
            assert gf2_solution_count(rows, [1] * n, g.m) == \
                count_odd_edge_sets_enum(g)


class TestMultinomial:
    def test_basic(self):
        assert multinomial(4, [2, 2]) == 6
        assert multinomial(4, [2]) == 6
        assert multinomial(3, [2, 2]) == 0
