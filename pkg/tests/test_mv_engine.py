"""Tests for twisted cohomology through the Mayer-Vietoris nullity formula."""

from fractions import Fraction

import pytest

from algebra.domains import QQ
from algebra.errors import DegreeOutOfRange
from algebra.matrix import Matrix
from algebra.number_field import NumberField
from cohomology.errors import ModeUnavailable
from cohomology.mapping_torus import TwistSpec, build, inoue_candidates, random_unimodular
from cohomology.mv_engine import (
    coefficient_field,
    duality_check,
    gamma_matrix,
    twisted_cohomology,
    vanishing_check,
)
from tests.conftest import CAT_MAP, TRIBONACCI

LEE = TwistSpec.lee()
UNTWISTED = TwistSpec.untwisted()
TRANSCENDENTAL = TwistSpec.transcendental()
I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_inoue_surfaces():
    for m in [Matrix.from_rows(TRIBONACCI), *inoue_candidates(limit=6)]:
        report = twisted_cohomology(build(m), LEE)
        assert report.dims == (0, 0, 1, 1, 0)
        assert vanishing_check(report).success


def test_lee_report_metadata():
    report = twisted_cohomology(build(TRIBONACCI), LEE, alpha_digits=12)
    assert report.alpha_approx == "1.839286755214"
    assert report.nullities == (0, 0, 1, 0)
    assert report.period.rank == 1
    assert report.field.startswith("Q(alpha)")


def test_four_torus():
    report = twisted_cohomology(build(I3), UNTWISTED)
    assert report.dims == (1, 4, 6, 4, 1)
    assert report.euler == 0
    check = vanishing_check(report)
    assert check.success
    assert check.metadata["skipped"]


def test_transcendental_vanishes():
    assert twisted_cohomology(build(TRIBONACCI), TRANSCENDENTAL).dims == (0,) * 5
    assert twisted_cohomology(build(CAT_MAP), TRANSCENDENTAL).dims == (0,) * 4
    assert twisted_cohomology(build(I3), TRANSCENDENTAL).dims == (0,) * 5


def test_rational_weight_on_four_torus():
    report = twisted_cohomology(build(I3), TwistSpec.rational(2))
    assert report.dims == (0,) * 5
    assert vanishing_check(report).success


def test_betti_numbers_of_mapping_tori():
    assert twisted_cohomology(build(TRIBONACCI), UNTWISTED).dims == (1, 1, 0, 1, 1)
    assert twisted_cohomology(build(CAT_MAP), UNTWISTED).dims == (1, 1, 1, 1)
    assert twisted_cohomology(build([[1, 1], [0, 1]]), UNTWISTED).dims == (1, 2, 2, 1)


def test_negative_weight_carries_warning():
    report = twisted_cohomology(build([[-1, 0], [0, -1]]), TwistSpec.rational(-1))
    assert report.dims == (0, 2, 2, 0)
    assert any("negative weight" in w for w in report.warnings)


def test_lee_needs_expanding_eigenvalue():
    with pytest.raises(ModeUnavailable):
        twisted_cohomology(build(I3), LEE)


def test_coefficient_fields():
    mt = build(TRIBONACCI)
    field = coefficient_field(mt, LEE)
    assert isinstance(field.domain, NumberField)
    assert field.weight == field.domain.generator
    assert coefficient_field(mt, TwistSpec.rational(3)).weight == 3
    assert coefficient_field(mt, TRANSCENDENTAL).domain.name == "Q(lambda)"


class TestGamma:
    def test_audit_ranks(self):
        mt = build(TRIBONACCI)
        report = twisted_cohomology(mt, LEE, audit=True)
        assert [g.rank for g in report.gamma] == [2, 6, 5, 2]

    def test_degree_two_block(self):
        g = gamma_matrix(build(TRIBONACCI), LEE, 2)
        assert g.matrix.shape == (6, 6)
        assert g.rank == 5

    def test_top_degree_block(self):
        mt = build(TRIBONACCI)
        g = gamma_matrix(mt, LEE, 3)
        alpha = coefficient_field(mt, LEE).weight
        assert g.matrix == Matrix.from_rows([[1, -1], [1, -alpha]], g.matrix.domain)
        assert g.rank == 2

    def test_degree_out_of_range(self):
        with pytest.raises(DegreeOutOfRange):
            gamma_matrix(build(TRIBONACCI), LEE, 4)


def test_duality(rng):
    weights = [Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-1), Fraction(5, 2)]
    for _ in range(20):
        mt = build(random_unimodular(3, rng))
        check = duality_check(mt, TwistSpec.rational(rng.choice(weights)))
        assert check.success, check.error
    assert duality_check(build(TRIBONACCI), UNTWISTED).success
    with pytest.raises(ModeUnavailable):
        duality_check(build(TRIBONACCI), LEE)


def test_conjugation_invariance(rng):
    for _ in range(10):
        a = random_unimodular(3, rng)
        perm = list(range(3))
        rng.shuffle(perm)
        p = Matrix.from_rows([[1 if perm[i] == j else 0 for j in range(3)] for i in range(3)], QQ)
        conjugated = p @ a @ p.T
        for tw in (UNTWISTED, TwistSpec.rational(2), TwistSpec.rational(-1), TRANSCENDENTAL):
            assert twisted_cohomology(build(a), tw).dims == twisted_cohomology(
                build(conjugated), tw
            ).dims


def test_euler_characteristic_vanishes(rng):
    for _ in range(20):
        mt = build(random_unimodular(rng.randint(1, 4), rng))
        for tw in (UNTWISTED, TwistSpec.rational(3), TRANSCENDENTAL):
            assert twisted_cohomology(mt, tw).euler == 0
