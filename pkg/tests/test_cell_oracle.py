"""Tests for the cellular cochain model of the mapping torus."""

from fractions import Fraction

import pytest

from algebra.linalg import rank_bareiss
from algebra.matrix import Matrix
from cohomology.cell_oracle import (
    TwistedComplex,
    build_mapping_torus_complex,
    complex_cohomology,
    cross_check,
)
from cohomology.errors import InvariantViolation, NotAComplex
from cohomology.mapping_torus import TwistSpec, build, inoue_candidates, random_unimodular
from tests.conftest import CAT_MAP, TRIBONACCI

I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_cochain_dimensions():
    c = build_mapping_torus_complex(build(I3), TwistSpec.untwisted())
    assert c.dims == (1, 4, 6, 4, 1)
    assert [d.shape for d in c.coboundaries] == [(4, 1), (6, 4), (4, 6), (1, 4)]


def test_untwisted_torus_has_zero_coboundaries():
    c = build_mapping_torus_complex(build(I3), TwistSpec.untwisted())
    assert all(d.is_zero for d in c.coboundaries)
    assert complex_cohomology(c) == [1, 4, 6, 4, 1]


def test_tribonacci_lee():
    mt = build(TRIBONACCI)
    c = build_mapping_torus_complex(mt, TwistSpec.lee())
    assert c.is_complex()
    assert rank_bareiss(c.coboundaries[2]) == 2
    assert complex_cohomology(c) == [0, 0, 1, 1, 0]
    assert cross_check(mt, TwistSpec.lee()).success


def test_cat_map():
    check = cross_check(build(CAT_MAP), TwistSpec.untwisted())
    assert check.success
    assert check.output["cellular"] == [1, 1, 1, 1]


def test_random_cross_checks(rng):
    weights = [Fraction(1), Fraction(2), Fraction(1, 3), Fraction(7)]
    for _ in range(50):
        mt = build(random_unimodular(rng.randint(1, 4), rng))
        tw = TwistSpec.rational(rng.choice(weights))
        check = cross_check(mt, tw)
        assert check.success, check.error
        assert build_mapping_torus_complex(mt, tw).is_complex()


@pytest.mark.parametrize("twist", [TwistSpec.untwisted(), TwistSpec.lee(), TwistSpec.rational(3)])
def test_inoue_candidates_cross_check(twist):
    for m in inoue_candidates(limit=4):
        check = cross_check(build(m), twist)
        assert check.success, check.error


def test_transcendental(rng):
    for _ in range(5):
        mt = build(random_unimodular(3, rng))
        check = cross_check(mt, TwistSpec.transcendental())
        assert check.success, check.error
        assert check.output["cellular"] == [0] * 5


def test_rejects_non_complex():
    c = build_mapping_torus_complex(build(I3), TwistSpec.rational(2))
    d1 = c.coboundaries[1]
    ones = Matrix(d1.rows, d1.cols, [c.domain.one] * (d1.rows * d1.cols), c.domain)
    broken = TwistedComplex(c.dims, (c.coboundaries[0], ones, *c.coboundaries[2:]), c.domain)
    assert not broken.is_complex()
    with pytest.raises(NotAComplex):
        complex_cohomology(broken)
    assert issubclass(NotAComplex, InvariantViolation)
