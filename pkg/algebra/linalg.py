"""Elimination kernels: Gaussian over fields, fraction-free Bareiss over integral domains.

Pivots are the first nonzero entry found scanning down the current column;
exact arithmetic needs no magnitude pivoting.
"""

from __future__ import annotations

from typing import Any, NamedTuple

from algebra.domains import PolynomialRing
from algebra.errors import NonSquare, NotAField
from algebra.matrix import Matrix
from algebra.polynomial import Poly


class RankNullity(NamedTuple):
    rank: int
    nullity: int


def _require_field(m: Matrix) -> None:
    if not m.domain.is_field:
        raise NotAField(f"Gaussian elimination needs a field, got {m.domain}")


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise NonSquare(f"Expected a square matrix, got {m.rows}x{m.cols}")


def reduced_row_echelon(m: Matrix) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    _require_field(m)
    dom = m.domain
    a = m.tolist()
    pivots: list[int] = []
    r = 0
    for j in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][j]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = dom.exquo(dom.one, a[r][j])
        a[r] = [inv * e for e in a[r]]
        for i in range(m.rows):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
    return a, pivots


def rank_nullity(m: Matrix) -> RankNullity:
    _, pivots = reduced_row_echelon(m)
    return RankNullity(len(pivots), m.cols - len(pivots))


def rank(m: Matrix) -> int:
    return rank_nullity(m).rank


def kernel_basis(m: Matrix) -> list[tuple[Any, ...]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    a, pivots = reduced_row_echelon(m)
    dom = m.domain
    basis = []
    for f in (j for j in range(m.cols) if j not in pivots):
        v = [dom.zero] * m.cols
        v[f] = dom.one
        for i, p in enumerate(pivots):
            v[p] = -a[i][f]
        basis.append(tuple(v))
    return basis


def rank_bareiss(m: Matrix) -> int:
    """Fraction-free echelon rank; every division is exact in the entry domain."""
    dom = m.domain
    a = m.tolist()
    prev = dom.one
    r = 0
    for j in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][j]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, m.rows):
            for k in range(j + 1, m.cols):
                a[i][k] = dom.exquo(a[r][j] * a[i][k] - a[i][j] * a[r][k], prev)
            a[i][j] = dom.zero
        prev = a[r][j]
        r += 1
    return r


def det(m: Matrix) -> Any:
    """Bareiss determinant."""
    _require_square(m)
    dom = m.domain
    n = m.rows
    if n == 0:
        return dom.one
    a = m.tolist()
    negate = False
    prev = dom.one
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return dom.zero
            a[k], a[p] = a[p], a[k]
            negate = not negate
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = dom.exquo(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return -result if negate else result


def det_gaussian(m: Matrix) -> Any:
    """Product of pivots of ordinary elimination; fields only."""
    _require_field(m)
    _require_square(m)
    dom = m.domain
    n = m.rows
    a = m.tolist()
    result = dom.one
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return dom.zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        pivot = a[k][k]
        result = result * pivot
        for i in range(k + 1, n):
            if a[i][k]:
                f = dom.exquo(a[i][k], pivot)
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return result


def minor(m: Matrix, i: int, j: int) -> Any:
    """Determinant with row i and column j deleted."""
    rows = [r for r in range(m.rows) if r != i]
    cols = [c for c in range(m.cols) if c != j]
    return det(m.submatrix(rows, cols))


def adjugate(m: Matrix) -> Matrix:
    """Transpose of the cofactor matrix, so m @ adjugate(m) = det(m) I."""
    _require_square(m)
    n = m.rows
    if n == 1:
        return Matrix.identity(1, m.domain)
    entries = []
    for i in range(n):
        for j in range(n):
            c = minor(m, j, i)
            entries.append(-c if (i + j) % 2 else c)
    return Matrix(n, n, entries, m.domain)


def charpoly(m: Matrix) -> Poly:
    """det(xI - m) for a rational matrix."""
    _require_square(m)
    ring = PolynomialRing()
    x = Poly.x()
    n = m.rows
    entries = [(x if i == j else Poly()) - Poly.coerce(m[i, j]) for i in range(n) for j in range(n)]
    return det(Matrix(n, n, entries, ring))
