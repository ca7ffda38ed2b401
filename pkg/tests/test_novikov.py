"""Tests for Novikov Betti numbers and Laurent torsion."""

from math import comb

from algebra.laurent import LaurentPoly
from algebra.linalg import det
from cohomology.mapping_torus import build, induced_maps, random_unimodular
from cohomology.novikov import novikov_invariants, pajitnov_consistency, wang_matrix
from tests.conftest import CAT_MAP, TRIBONACCI

T = LaurentPoly.t()


def test_tribonacci_torsion():
    inv = novikov_invariants(build(TRIBONACCI))
    assert inv.betti == (0, 0, 0, 0, 0)
    assert inv.torsion == (
        (T - 1,),
        (T**3 + T**2 + T - 1,),
        (T**3 - T**2 - T - 1,),
        (T - 1,),
        (),
    )
    assert inv.wang_determinants[1] == T**3 + T**2 + T - 1
    assert [str(d) for d in inv.torsion[0]] == ["t - 1"]


def test_four_torus_torsion():
    inv = novikov_invariants(build([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert inv.betti == (0,) * 5
    for k in range(4):
        assert inv.torsion[k] == (T - 1,) * comb(3, k)
    assert inv.torsion[4] == ()


def test_cat_map():
    inv = novikov_invariants(build(CAT_MAP))
    assert inv.betti == (0, 0, 0, 0)
    assert inv.torsion[1] == (T**2 - 3 * T + 1,)


def test_wang_matrix_shape():
    w = wang_matrix(build(TRIBONACCI), 2)
    assert w.degree == 2
    assert w.matrix.shape == (3, 3)


def test_divisors_multiply_to_determinant(rng):
    for _ in range(20):
        mt = build(random_unimodular(rng.choice((2, 3)), rng))
        inv = novikov_invariants(mt)
        for k in range(mt.n + 1):
            product = LaurentPoly.constant(1)
            for d in inv.torsion[k]:
                product = product * d
            determinant = inv.wang_determinants[k]
            assert determinant
            assert product == LaurentPoly.from_poly(determinant.normalize().primitive)


def test_agrees_with_transcendental_twist(rng):
    for _ in range(20):
        mt = build(random_unimodular(rng.choice((2, 3, 4)), rng))
        check = pajitnov_consistency(mt)
        assert check.success, check.error
        assert check.output["novikov_betti"] == [0] * (mt.n + 2)


def test_induced_maps_are_unimodular(rng):
    for _ in range(20):
        mt = build(random_unimodular(rng.choice((2, 3, 4)), rng))
        maps = induced_maps(mt)
        for k in range(mt.n + 1):
            expected = mt.determinant ** comb(mt.n - 1, k - 1) if k else 1
            assert det(maps[k]) == expected
            assert expected in (1, -1)
            # At t = 0 the Wang matrix is -I.
            assert wang_matrix(mt, k).determinant.coefficient(0) == (-1) ** comb(mt.n, k)
