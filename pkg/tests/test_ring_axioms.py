"""Randomized ring and field axioms for the exact coefficient types."""

import random
from fractions import Fraction

import pytest

from algebra.laurent import LaurentPoly
from algebra.number_field import NumberField
from algebra.polynomial import Poly
from algebra.rational_function import RationalFunction

X = Poly.x()
TRIBONACCI_FIELD = NumberField(X**3 - X**2 - X - 1)


def _fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def _poly(rng: random.Random, degree: int = 3) -> Poly:
    return Poly([_fraction(rng) for _ in range(rng.randint(0, degree + 1))])


def _laurent(rng: random.Random) -> LaurentPoly:
    return LaurentPoly([_fraction(rng) for _ in range(rng.randint(0, 4))], rng.randint(-3, 3))


def _number(rng: random.Random):
    return TRIBONACCI_FIELD(_poly(rng, degree=2))


def _rational_function(rng: random.Random) -> RationalFunction:
    den = _poly(rng, degree=2)
    while den.is_zero:
        den = _poly(rng, degree=2)
    return RationalFunction(_poly(rng, degree=2), den)


RINGS = {
    "poly": (_poly, Poly(), Poly.constant(1)),
    "laurent": (_laurent, LaurentPoly(), LaurentPoly.constant(1)),
    "number-field": (_number, TRIBONACCI_FIELD.zero, TRIBONACCI_FIELD.one),
    "rational-function": (
        _rational_function,
        RationalFunction(Poly()),
        RationalFunction(Poly.constant(1)),
    ),
}


@pytest.mark.parametrize("ring", RINGS)
def test_commutative_ring_axioms(rng, ring):
    draw, zero, one = RINGS[ring]
    for _ in range(40):
        a, b, c = draw(rng), draw(rng), draw(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        assert a + (-a) == zero
        assert a * zero == zero


@pytest.mark.parametrize("ring", ["number-field", "rational-function"])
def test_field_inverses(rng, ring):
    draw, zero, one = RINGS[ring]
    for _ in range(40):
        a, b = draw(rng), draw(rng)
        if a == zero:
            continue
        assert a * a.inverse() == one
        assert (b / a) * a == b


def test_laurent_units(rng):
    for _ in range(40):
        u = LaurentPoly.monomial(_fraction(rng) or 1, rng.randint(-4, 4))
        assert u.is_unit
        assert u * u.inverse() == 1
        f = _laurent(rng)
        assert (f * u) * u.inverse() == f


def test_scalar_mixing(rng):
    for _ in range(20):
        q = _fraction(rng)
        p = _poly(rng)
        assert q * p == p * q
        assert LaurentPoly.from_poly(p) * q == LaurentPoly.from_poly(p * q)
        assert RationalFunction(p) + q == RationalFunction(p + q)
        assert _number(rng) * 0 == TRIBONACCI_FIELD.zero
