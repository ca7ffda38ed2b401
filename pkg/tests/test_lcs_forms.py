"""Tests for exact differential forms and the Tricerri identity battery."""

from fractions import Fraction
from itertools import combinations

import pytest

from algebra.laurent import LaurentPoly
from cohomology.errors import DegreeOverflow, ThetaNotClosed
from cohomology.lcs_forms import (
    DIM,
    DifferentialForm,
    d_theta,
    dx,
    exterior_d,
    hodge_star,
    inner_product,
    metric_frame,
    tricerri_data,
    verify_generators,
    verify_tricerri,
    wedge,
)

X, Y, W1, W2 = range(4)


def u(k, c=1):
    return LaurentPoly.monomial(c, k)


def random_form(rng, degree):
    terms = {}
    for index in combinations(range(DIM), degree):
        if rng.random() < 0.6:
            terms[index] = LaurentPoly([rng.randint(-3, 3) for _ in range(3)], rng.randint(-4, 2))
    return DifferentialForm(degree, terms)


class TestExteriorAlgebra:
    def test_wedge_anticommutes(self):
        assert wedge(dx(X), dx(Y)) == DifferentialForm.basis(X, Y)
        assert wedge(dx(Y), dx(X)) == DifferentialForm.basis(X, Y, coeff=-1)
        assert wedge(dx(X), dx(X)).is_zero

    def test_degree_overflow(self):
        with pytest.raises(DegreeOverflow):
            wedge(DifferentialForm.basis(X, Y, W1), DifferentialForm.basis(X, W2))

    def test_d_of_coordinate_forms(self):
        assert exterior_d(dx(W2) * u(-2)).is_zero
        # d(dw1/w2) = -w2^-2 dw2^dw1 = w2^-2 dw1^dw2
        assert exterior_d(dx(W1) * u(-2)) == DifferentialForm.basis(W1, W2, coeff=u(-4))
        assert exterior_d(DifferentialForm.basis(X, Y, coeff=u(2))) == DifferentialForm.basis(
            X, Y, W2
        )

    def test_d_squared_vanishes(self, rng):
        for _ in range(20):
            k = rng.randint(0, 2)
            assert exterior_d(exterior_d(random_form(rng, k))).is_zero

    def test_leibniz(self, rng):
        for _ in range(20):
            p = rng.randint(0, 2)
            q = rng.randint(0, 3 - p)
            a, b = random_form(rng, p), random_form(rng, q)
            lhs = exterior_d(wedge(a, b))
            rhs = wedge(exterior_d(a), b) + wedge(a, exterior_d(b)) * (-1) ** p
            assert lhs == rhs

    def test_str(self):
        assert str(dx(W2) * u(-2)) == "u^-2 dw2"
        assert str(DifferentialForm.zero(2)) == "0"


class TestMetric:
    def test_frame_is_orthonormal(self):
        frame = metric_frame()
        gram = frame.gram()
        for i in range(DIM):
            for j in range(DIM):
                assert gram[i][j] == (1 if i == j else 0)

    def test_volume(self):
        assert metric_frame().volume == DifferentialForm.basis(X, Y, W1, W2, coeff=u(-2))
        assert tricerri_data().dvol == metric_frame().volume

    def test_double_star(self, rng):
        for k in range(DIM + 1):
            a = random_form(rng, k)
            assert hodge_star(hodge_star(a)) == a * (-1) ** (k * (DIM - k))

    def test_inner_product_symmetric(self, rng):
        for k in range(DIM + 1):
            a, b = random_form(rng, k), random_form(rng, k)
            assert inner_product(a, b) == inner_product(b, a)

    def test_inner_product_degree_mismatch(self):
        with pytest.raises(ValueError):
            inner_product(dx(X), DifferentialForm.basis(X, Y))


class TestTwistedDifferential:
    def test_function(self):
        theta = tricerri_data().theta
        assert d_theta(DifferentialForm.function(1), theta) == -theta

    def test_twisted_d_squared_vanishes(self, rng):
        theta = tricerri_data().theta
        for k in range(3):
            a = random_form(rng, k)
            assert d_theta(d_theta(a, theta), theta).is_zero

    def test_theta_must_be_closed(self):
        with pytest.raises(ThetaNotClosed):
            d_theta(DifferentialForm.function(1), dx(X) * u(1))
        with pytest.raises(ThetaNotClosed):
            d_theta(DifferentialForm.function(1), DifferentialForm.basis(X, Y))


class TestTricerri:
    def test_normalized_forms(self):
        data = tricerri_data()
        assert data.normalization == Fraction(-1, 2)
        assert data.theta == dx(W2) * u(-2)
        assert data.eta == dx(W1) * u(-2, Fraction(1, 2))
        assert data.omega1 == DifferentialForm.basis(W1, W2, coeff=u(-4))
        assert data.omega2 == DifferentialForm.basis(X, Y, coeff=u(2))
        assert data.printed_omega1 == data.omega1 * -2

    def test_battery_passes(self):
        result = verify_tricerri()
        assert result.success, result.error
        assert result.metadata["normalization"] == "-1/2"
        assert len(result.output) == 11

    def test_generators(self):
        result = verify_generators()
        assert result.success, result.error

    def test_wrong_theta_fails(self):
        data = tricerri_data()
        result = verify_tricerri(theta=data.theta * 2)
        assert not result.success
        failed = {c.name for c in result.output if not c.success}
        assert "d omega = theta ^ omega" in failed

    def test_degenerate_omega_fails(self):
        data = tricerri_data()
        result = verify_tricerri(omega=data.omega1)
        failed = {c.name for c in result.output if not c.success}
        assert "omega ^ omega != 0" in failed
        assert "dvol = omega ^ omega / 2" in failed

    def test_non_closed_theta_reported(self):
        result = verify_tricerri(theta=dx(X) * u(1))
        failed = {c.name for c in result.output if not c.success}
        assert "d theta = 0" in failed
        assert "twisted operators" in failed
