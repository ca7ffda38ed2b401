"""Tests for Laurent polynomials and rational functions."""

from fractions import Fraction

import pytest

from algebra.errors import InexactDivision
from algebra.laurent import LaurentPoly, laurent_normalize
from algebra.polynomial import Poly
from algebra.rational_function import RationalFunction

T = LaurentPoly.t()


def test_normalize_strips_powers():
    form = laurent_normalize(T**3 + T**2)
    assert form.exponent == 2
    assert form.primitive == Poly([1, 1])
    assert form.constant == 1


def test_normalize_negative_exponent():
    form = laurent_normalize(T ** -1 * 3 - 3)
    assert form.exponent == -1
    assert form.primitive == Poly([-1, 1])
    assert form.constant == -3


def test_normalize_unit():
    form = laurent_normalize(LaurentPoly.constant(5))
    assert (form.exponent, form.primitive, form.constant) == (0, Poly([1]), 5)


def test_units():
    assert (T**-2 * 7).is_unit
    assert not (T - 1).is_unit
    assert (T**-3).inverse() == T**3
    with pytest.raises(InexactDivision):
        (T + 1).inverse()


def test_exquo_up_to_units():
    f = (T - 1) * (T + 2) * T**-4
    assert f.exquo(T - 1) == (T + 2) * T**-4
    with pytest.raises(InexactDivision):
        f.exquo(T - 3)


def test_format():
    assert str(T**-2 * 2 - 1) == "-1 + 2*t^-2"
    assert (T**2 - T**-1).format("u") == "u^2 - u^-1"


def test_derivative_and_evaluation():
    f = T**-2 + T**3
    assert f.derivative() == T**-3 * -2 + T**2 * 3
    assert f(Fraction(2)) == Fraction(1, 4) + 8


def test_rational_function_reduces():
    x = Poly.x()
    f = RationalFunction((x - 1) * (x + 1), (x - 1) * 2)
    assert f.num == (x + 1) * Fraction(1, 2)
    assert f.den == Poly([1])
    assert RationalFunction.indeterminate() - 1 != 0
    assert RationalFunction.from_laurent(T**-1) * x == 1


def test_normalize_is_idempotent(rng):
    for _ in range(50):
        coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))]
        f = LaurentPoly(coeffs, rng.randint(-4, 4))
        if f.is_zero:
            continue
        form = laurent_normalize(f)
        assert form.primitive.leading == 1
        assert form.primitive.coeffs[0] != 0
        assert LaurentPoly.monomial(form.constant, form.exponent) * form.primitive == f
        again = laurent_normalize(LaurentPoly.from_poly(form.primitive))
        assert again == (0, form.primitive, 1)
