"""Tests for exterior powers and the cyclic basis of the second power."""

from math import comb

import pytest

from algebra.errors import DegreeOutOfRange, NonSquare
from algebra.exterior import (
    cyclic_basis_change,
    exterior_power,
    to_cyclic_basis,
    wedge_basis,
)
from algebra.linalg import adjugate, det
from algebra.matrix import Matrix
from cohomology.mapping_torus import random_unimodular
from tests.conftest import random_rational_matrix


def test_lexicographic_basis():
    assert wedge_basis(3, 2) == [(0, 1), (0, 2), (1, 2)]


def test_diagonal_products():
    assert exterior_power(Matrix.diag([2, 3, 5]), 2) == Matrix.diag([6, 10, 15])


def test_extreme_degrees(tribonacci):
    assert exterior_power(tribonacci, 0) == Matrix.identity(1)
    assert exterior_power(tribonacci, 1) == tribonacci
    assert exterior_power(tribonacci, 3) == Matrix.identity(1)


def test_functoriality(rng):
    for _ in range(50):
        a = random_rational_matrix(rng, 4, 4, bound=2)
        b = random_rational_matrix(rng, 4, 4, bound=2)
        for k in range(5):
            assert exterior_power(a @ b, k) == exterior_power(a, k) @ exterior_power(b, k)


def test_determinant_identity(rng):
    for _ in range(10):
        n = rng.randint(2, 4)
        a = random_rational_matrix(rng, n, n, bound=3)
        for k in range(1, n + 1):
            assert det(exterior_power(a, k)) == det(a) ** comb(n - 1, k - 1)


def test_cyclic_basis_gives_cofactor_matrix(tribonacci, rng):
    assert to_cyclic_basis(exterior_power(tribonacci, 2)) == adjugate(tribonacci).T
    for _ in range(10):
        a = random_unimodular(3, rng)
        assert to_cyclic_basis(exterior_power(a, 2)) == adjugate(a).T


def test_cyclic_change_is_involution():
    p = cyclic_basis_change()
    assert p @ p == Matrix.identity(3)


def test_rejects_bad_input(tribonacci):
    with pytest.raises(NonSquare):
        exterior_power(Matrix.zeros(2, 3), 1)
    with pytest.raises(DegreeOutOfRange):
        exterior_power(tribonacci, 4)
    with pytest.raises(DegreeOutOfRange):
        to_cyclic_basis(Matrix.identity(2))
