"""Tests for polynomial arithmetic and factorization."""

from fractions import Fraction

import pytest
import sympy

from algebra.errors import DivisionByZero, FactorizationTooLarge, InexactDivision, ZeroPolynomial
from algebra.factor import is_irreducible, poly_factor, rational_roots, squarefree_decomposition
from algebra.polynomial import Poly, interpolate

X = Poly.x()


def to_sympy(p: Poly) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * x**k
                          for k, c in enumerate(p.coeffs)), x, domain="QQ")


class TestArithmetic:
    def test_normalizes_trailing_zeros(self):
        assert Poly([1, 2, 0, 0]).degree == 1
        assert Poly([0, 0]).is_zero
        assert Poly().degree == -1

    def test_divmod(self):
        q, r = divmod(X**3 - 1, X - 1)
        assert q == X**2 + X + 1
        assert r.is_zero

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            divmod(X, Poly())

    def test_exquo_inexact(self):
        with pytest.raises(InexactDivision):
            (X**2 + 1).exquo(X - 1)

    def test_xgcd_bezout(self):
        a = (X - 1) * (X + 2)
        b = (X - 1) * (X**2 + 1)
        g, s, t = Poly.xgcd(a, b)
        assert g == X - 1
        assert s * a + t * b == g

    def test_primitive_and_content(self):
        p = Poly([Fraction(1, 2), Fraction(-3, 4)])
        assert p.primitive() == Poly([-2, 3])
        assert p.content() == Fraction(1, 4)

    def test_format(self):
        assert str(X**3 - X**2 - X - 1) == "x^3 - x^2 - x - 1"
        assert (X * 2 + Fraction(1, 3)).format("t") == "2*t + 1/3"

    def test_interpolate(self):
        p = interpolate([0, 1, 2], [1, 2, 5])
        assert p == X**2 + 1


class TestFactor:
    def test_difference_of_squares(self):
        assert poly_factor(X**2 - 1) == [(X - 1, 1), (X + 1, 1)]

    def test_tribonacci_irreducible(self):
        p = X**3 - X**2 - X - 1
        assert poly_factor(p) == [(p, 1)]
        assert is_irreducible(p)

    def test_multiplicities(self):
        p = (X - 2) ** 2 * (X**2 + 1)
        assert poly_factor(p) == [(X - 2, 2), (X**2 + 1, 1)]

    def test_kronecker_split_quartic(self):
        p = (X**2 + X + 1) * (X**2 - 3)
        assert poly_factor(p) == [(X**2 - 3, 1), (X**2 + X + 1, 1)]

    def test_squarefree_decomposition(self):
        p = (X - 1) ** 3 * (X + 1)
        assert squarefree_decomposition(p) == [(X + 1, 1), (X - 1, 3)]

    def test_rational_roots(self):
        p = (X * 2 - 1) * (X + 3) * (X**2 + 1)
        assert rational_roots(p) == [Fraction(-3), Fraction(1, 2)]

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomial):
            poly_factor(Poly())

    def test_degree_limit(self):
        p = X**10 + X + 1
        with pytest.raises(FactorizationTooLarge):
            poly_factor(p, max_degree=8)

    def test_random_products_match_sympy(self, rng):
        for _ in range(20):
            factors = [Poly([rng.randint(-3, 3) for _ in range(rng.randint(2, 3))] + [1])
                       for _ in range(2)]
            p = factors[0] * factors[1]
            ours = poly_factor(p)
            product = Poly.constant(1)
            for f, m in ours:
                assert is_irreducible(f)
                product = product * f**m
            assert product == p.monic()
            expected = sorted(
                (g.degree(), m) for g, m in to_sympy(p).factor_list()[1]
            )
            assert sorted((f.degree, m) for f, m in ours) == expected
