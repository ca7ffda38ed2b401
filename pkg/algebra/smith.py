"""Smith normal form over Q[x] and over the Laurent ring Q[t, t^-1]."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from algebra.domains import LaurentRing, PolynomialRing
from algebra.errors import DivisionByZero, InexactDivision, MixedCoefficients
from algebra.laurent import LaurentPoly
from algebra.matrix import Matrix
from algebra.polynomial import Poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """left @ A @ right == diagonal, with left and right invertible over the domain."""

    left: Matrix
    diagonal: Matrix
    right: Matrix

    @property
    def divisors(self) -> list[Any]:
        d = self.diagonal
        return [d[i, i] for i in range(min(d.rows, d.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d)


def is_smith_form(d: Matrix) -> bool:
    """Diagonal, zeros trailing, and each nonzero entry divides the next."""
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and d[i, j]:
                return False
    diag = [d[i, i] for i in range(min(d.rows, d.cols))]
    for a, b in zip(diag, diag[1:]):
        if not a:
            if b:
                return False
            continue
        if not b:
            continue
        try:
            d.domain.exquo(b, a)
        except (InexactDivision, DivisionByZero):
            return False
    return True


class _Reducer:
    """Mutable working copy: A together with the transforms U, V accumulated so far."""

    def __init__(self, m: Matrix):
        self.rows, self.cols = m.rows, m.cols
        self.a = m.tolist()
        self.u = Matrix.identity(m.rows, m.domain).tolist()
        self.v = Matrix.identity(m.cols, m.domain).tolist()

    def swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: Any) -> None:
        """row[target] += factor * row[source]"""
        for mat in (self.a, self.u):
            mat[target] = [x + factor * y for x, y in zip(mat[target], mat[source])]

    def add_col(self, target: int, source: int, factor: Any) -> None:
        for mat in (self.a, self.v):
            for row in mat:
                row[target] = row[target] + factor * row[source]

    def scale_row(self, i: int, factor: Any) -> None:
        for mat in (self.a, self.u):
            mat[i] = [factor * x for x in mat[i]]

    def smallest_entry(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                e = self.a[i][j]
                if e and (best is None or e.degree < self.a[best[0]][best[1]].degree):
                    best = (i, j)
        return best

    def clear_pivot(self, t: int) -> None:
        """Make a[t][t] divide every entry of its row, its column and the trailing block."""
        while True:
            changed = False
            for i in range(t + 1, self.rows):
                if self.a[i][t]:
                    q, r = divmod(self.a[i][t], self.a[t][t])
                    self.add_row(i, t, -q)
                    if r:
                        self.swap_rows(i, t)
                        changed = True
            for j in range(t + 1, self.cols):
                if self.a[t][j]:
                    q, r = divmod(self.a[t][j], self.a[t][t])
                    self.add_col(j, t, -q)
                    if r:
                        self.swap_cols(j, t)
                        changed = True
            if changed:
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, self.rows)
                    for j in range(t + 1, self.cols)
                    if self.a[i][j] % self.a[t][t]
                ),
                None,
            )
            if bad is None:
                return
            self.add_row(t, bad, Poly.constant(1))

    def result(self, domain: Any) -> SmithForm:
        return SmithForm(
            Matrix.from_rows(self.u, domain) if self.rows else Matrix(0, 0, (), domain),
            Matrix(self.rows, self.cols, (e for r in self.a for e in r), domain),
            Matrix.from_rows(self.v, domain) if self.cols else Matrix(0, 0, (), domain),
        )


def euclidean_smith(m: Matrix) -> SmithForm:
    """Smith form over Q[x] with monic divisors, by Euclidean row and column reduction."""
    if not isinstance(m.domain, PolynomialRing):
        raise MixedCoefficients(f"euclidean_smith works over Q[x], got {m.domain}")
    red = _Reducer(m)
    for t in range(min(m.rows, m.cols)):
        pos = red.smallest_entry(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            red.swap_rows(i, t)
        if j != t:
            red.swap_cols(j, t)
        red.clear_pivot(t)
        lead = red.a[t][t].leading
        if lead != 1:
            red.scale_row(t, Poly.constant(1 / lead))
    return red.result(m.domain)


def smith_normal_form(m: Matrix) -> SmithForm:
    """Smith form over Q[t, t^-1]; divisors are monic polynomials with nonzero constant term.

    Each row is first multiplied by the unit t^-k that makes its entries
    polynomials; the Euclidean form over Q[t] is then computed and its
    diagonal stripped of the remaining unit factors c*t^k.
    """
    ring = LaurentRing()
    if not isinstance(m.domain, LaurentRing):
        m = m.convert(ring)
    shifts = []
    poly_rows = []
    for i in range(m.rows):
        row = m.row(i)
        low = min((e.low_degree for e in row if e), default=0)
        shifts.append(-low)
        poly_rows.append([e.shift(-low).to_poly() for e in row])
    core = euclidean_smith(
        Matrix(m.rows, m.cols, (e for r in poly_rows for e in r), PolynomialRing("t"))
    )
    row_units = Matrix.diag([LaurentPoly.monomial(1, s) for s in shifts], ring)
    left = (core.left.convert(ring) @ row_units).tolist()
    diagonal = core.diagonal.convert(ring).tolist()
    for i in range(min(m.rows, m.cols)):
        d = diagonal[i][i]
        if not d:
            continue
        form = d.normalize()
        unit_inverse = LaurentPoly.monomial(1 / form.constant, -form.exponent)
        left[i] = [unit_inverse * e for e in left[i]]
        diagonal[i][i] = LaurentPoly.from_poly(form.primitive)
    logger.debug(
        f"Laurent Smith form divisors: {[str(diagonal[i][i]) for i in range(min(m.rows, m.cols))]}"
    )
    return SmithForm(
        Matrix(m.rows, m.rows, (e for r in left for e in r), ring),
        Matrix(m.rows, m.cols, (e for r in diagonal for e in r), ring),
        core.right.convert(ring),
    )
