"""Exterior powers (compound matrices) of square matrices."""

from __future__ import annotations

from itertools import combinations
from math import comb

from algebra.domains import QQ
from algebra.errors import DegreeOutOfRange, NonSquare
from algebra.linalg import det
from algebra.matrix import Matrix


def wedge_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of range(n) in lexicographic order: the basis e_I of the k-th exterior power."""
    return list(combinations(range(n), k))


def exterior_power(m: Matrix, k: int) -> Matrix:
    """Matrix of k x k minors det(m[I, J]) over lexicographic k-subsets I, J."""
    if not m.is_square:
        raise NonSquare(f"Exterior powers need a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if not 0 <= k <= n:
        raise DegreeOutOfRange(f"Degree {k} outside 0..{n}")
    basis = wedge_basis(n, k)
    size = comb(n, k)
    if k == 0:
        return Matrix.identity(1, m.domain)
    return Matrix(size, size, (det(m.submatrix(i, j)) for i in basis for j in basis), m.domain)


def cyclic_wedge_basis() -> list[tuple[int, int]]:
    """e2^e3, e3^e1, e1^e2 as ordered index pairs (0-based)."""
    return [(1, 2), (2, 0), (0, 1)]


def cyclic_basis_change() -> Matrix:
    """Columns are the cyclic 2-vectors in lexicographic coordinates; self-inverse."""
    lex = wedge_basis(3, 2)
    columns = []
    for a, b in cyclic_wedge_basis():
        sign = 1 if a < b else -1
        col = [0, 0, 0]
        col[lex.index((min(a, b), max(a, b)))] = sign
        columns.append(col)
    return Matrix(3, 3, (columns[j][i] for i in range(3) for j in range(3)), QQ)


def to_cyclic_basis(m: Matrix) -> Matrix:
    """Rewrite a second exterior power of a 3x3 matrix in the cyclic basis.

    In that basis the second exterior power of A is the cofactor matrix,
    the transpose of adj(A).
    """
    if m.shape != (3, 3):
        raise DegreeOutOfRange(f"The cyclic basis is defined for 3x3 matrices, got {m.shape}")
    p = cyclic_basis_change().convert(m.domain)
    return p @ m @ p
