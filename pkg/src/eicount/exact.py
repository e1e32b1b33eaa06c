"""Exact arithmetic: dense univariate polynomials over Fraction, Lagrange
interpolation, rational linear solving, GF(2) solution counting, and the
moment-recovery routine behind the wedge-packing pipeline.

No floating point anywhere; rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


class Polynomial:
    """Dense univariate polynomial over Fraction; index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Polynomial":
        return Polynomial([c])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * Fraction(other) for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)), exact."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.const(c)
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def falling_factorial(x, t: int):
    """(x)_t = x (x-1) ... (x-t+1) for a scalar or a Polynomial; (x)_0 = 1."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if isinstance(x, Polynomial):
        acc = Polynomial.const(1)
        for i in range(t):
            acc = acc * (x - i)
        return acc
    acc = Fraction(1)
    for i in range(t):
        acc *= Fraction(x) - i
    return acc


def interpolate(points) -> Polynomial:
    """Unique polynomial of degree < #points through the given points,
    via Newton divided differences (exact)."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x value")
    # divided-difference coefficients
    dd = ys[:]
    for lvl in range(1, len(xs)):
        for i in range(len(xs) - 1, lvl - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl])
    poly = Polynomial()
    basis = Polynomial.const(1)
    for i, c in enumerate(dd):
        poly = poly + basis * c
        basis = basis * (Polynomial.x() - xs[i])
    return poly


def solve_rational(matrix, rhs):
    """Exact solution of a square nonsingular system by Gaussian elimination
    with partial (first-nonzero) pivoting over Fraction."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("system must be square")
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def sigma_expand(r: int, k: int):
    """Expand (y - t)_{2(r-k)} in powers of y with polynomial-in-t
    coefficients: returns [sigma_0, ..., sigma_{2(r-k)}] such that
    (y - t)_{2(r-k)} = sum_i sigma_i(t) * y^{2(r-k)-i}.

    sigma_i has degree i with leading coefficient (-1)^i * C(2(r-k), i).
    """
    if r < k or k < 0:
        raise ValueError("need r >= k >= 0")
    return list(_sigma_expand_cached(2 * (r - k)))


@lru_cache(maxsize=None)
def _sigma_expand_cached(d: int):
    # coefficients of y^j as polynomials in t, built by multiplying the
    # factors (y - (t + i)) for i = 0..d-1
    by_ypow = [Polynomial.const(1)]  # index = power of y
    t = Polynomial.x()
    for i in range(d):
        shifted = [Polynomial()] + by_ypow          # * y
        lowered = [c * (-(t + i)) for c in by_ypow]  # * -(t+i)
        by_ypow = [a + b for a, b in
                   zip(shifted, lowered + [Polynomial()] * (len(shifted) - len(lowered)))]
    return tuple(by_ypow[d - i] for i in range(d + 1))


# ---------------------------------------------------------------------------
# moment recovery

_RETRY_SHIFTS = 2


def required_inputs(k: int) -> int:
    """R(k): the largest polynomial index consulted when recovering the
    level-k unknowns.  The recovery runs level-by-level up to level 3k (the
    highest moment the final Vandermonde step needs) and at level L reads
    coefficients of the polynomials with indices ceil(L/2) .. L, plus up to
    ``_RETRY_SHIFTS`` spare indices for singular-system retries."""
    return 3 * k + _RETRY_SHIFTS


def recover_unknowns(k: int, polys):
    """Recover ``[a_{0,k}, ..., a_{k,0}]`` from the polynomial family

        P_r(y) = sum_{j=0}^{r} sum_{t=0}^{j} a_{t,j-t} C(r,j) (y-t)_{2(r-j)}

    given the coefficient vectors of P_0 .. P_R with R >= required_inputs(k).

    Works level by level: the level-L moments I_{j,i} = sum_t a_{t,j-t} t^i
    with 2j + i = L are read off the y^{2r-L} coefficients of several P_r
    after subtracting the contribution of lower-level moments, then the
    level-k unknowns are extracted from I_{k,0..k} through a Vandermonde
    solve.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    polys = [p if isinstance(p, Polynomial) else Polynomial(p) for p in polys]
    if len(polys) < 3 * k + 1:
        raise ValueError(f"need at least P_0..P_{3 * k} for k={k}")
    moments = {(0, 0): polys[0].coeff(0)}  # P_0(y) is the constant a_{0,0}
    for level in range(1, 3 * k + 1):
        unknowns = level // 2 + 1  # I_{j, level-2j} for j = 0 .. floor(level/2)
        for shift in range(_RETRY_SHIFTS + 1):
            nodes = [(level + 1) // 2 + shift + j for j in range(unknowns)]
            if nodes[-1] >= len(polys):
                raise ValueError("not enough input polynomials")
            matrix, rhs = [], []
            for r in nodes:
                total = polys[r].coeff(2 * r - level)
                known = Fraction(0)
                row = []
                for j in range(unknowns):
                    i = level - 2 * j
                    sig = _sigma_expand_cached(2 * (r - j))[i]
                    # all but the leading t^i term of sigma_i hit lower levels
                    for jj in range(i):
                        c = sig.coeff(jj)
                        if c:
                            known += comb(r, j) * c * moments[(j, jj)]
                    row.append(Fraction(comb(2 * (r - j), i) * comb(r, j)))
                sign = -1 if level % 2 else 1
                rhs.append(sign * (total - known))
                matrix.append(row)
            try:
                sol = solve_rational(matrix, rhs)
            except ValueError:
                continue  # singular: shift all nodes up and retry
            for j, val in enumerate(sol):
                moments[(j, level - 2 * j)] = val
            break
        else:
            raise ValueError(f"singular moment system at level {level}")
    vander = [[Fraction(t) ** i for t in range(k + 1)] for i in range(k + 1)]
    return solve_rational(vander, [moments[(k, i)] for i in range(k + 1)])


@lru_cache(maxsize=None)
def _shifted_falling(t: int, d: int) -> Polynomial:
    return falling_factorial(Polynomial.x() - t, d)


def plant_polynomials(a, max_r: int):
    """Forward evaluation of the defining sum: given planted values
    ``a[(t, b)]`` (absent pairs count as zero), produce P_0 .. P_{max_r}.
    This is the independent oracle for :func:`recover_unknowns`."""
    out = []
    for r in range(max_r + 1):
        p = Polynomial()
        for j in range(r + 1):
            for t in range(j + 1):
                coef = Fraction(a.get((t, j - t), 0))
                if coef:
                    p = p + coef * comb(r, j) * _shifted_falling(t, 2 * (r - j))
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# GF(2)

def gf2_solution_count(rows, rhs, ncols: int) -> int:
    """Number of solutions of a linear system over GF(2).

    ``rows`` are bitmask-packed coefficient rows over ``ncols`` variables,
    ``rhs`` the right-hand-side bits.  Returns 0 when inconsistent and
    2^(ncols - rank) otherwise.
    """
    rows = [int(r) for r in rows]
    rhs = [int(b) & 1 for b in rhs]
    if len(rows) != len(rhs):
        raise ValueError("rhs length mismatch")
    pivots = []  # (column, row, rhs-bit)
    rank = 0
    for r, b in zip(rows, rhs):
        for col, prow, pb in pivots:
            if (r >> col) & 1:
                r ^= prow
                b ^= pb
        if r == 0:
            if b:
                return 0
            continue
        col = r.bit_length() - 1
        pivots.append((col, r, b))
        rank += 1
    return 2 ** (ncols - rank)


def multinomial(n: int, parts) -> int:
    """n! / (p_1! ... p_l! (n - sum p_i)!); zero if the parts overfill n."""
    parts = list(parts)
    s = sum(parts)
    if s > n or any(p < 0 for p in parts):
        return 0
    out = 1
    rem = n
    for p in parts:
        out *= comb(rem, p)
        rem -= p
    return out


__all__ = [
    "Polynomial", "falling_factorial", "interpolate", "solve_rational",
    "sigma_expand", "recover_unknowns", "required_inputs",
    "plant_polynomials", "gf2_solution_count", "multinomial",
]
