"""Dense exact matrices over a single coefficient domain."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any, Optional

from algebra.domains import (
    QQ,
    Domain,
    LaurentRing,
    PolynomialRing,
    RationalFunctionField,
)
from algebra.errors import MixedCoefficients, NonSquare
from algebra.laurent import LaurentPoly
from algebra.number_field import NumberFieldElement
from algebra.polynomial import Poly
from algebra.rational_function import RationalFunction


def infer_domain(entries: Iterable[Any]) -> Domain:
    """The one coefficient structure shared by ``entries``; rationals embed anywhere."""
    found: Optional[Domain] = None
    for e in entries:
        if isinstance(e, bool):
            raise MixedCoefficients("Booleans are not matrix entries")
        if isinstance(e, (int, Fraction)):
            continue
        if isinstance(e, NumberFieldElement):
            candidate: Domain = e.field
        elif isinstance(e, RationalFunction):
            candidate = RationalFunctionField()
        elif isinstance(e, LaurentPoly):
            candidate = LaurentRing()
        elif isinstance(e, Poly):
            candidate = PolynomialRing()
        else:
            raise MixedCoefficients(f"Unsupported matrix entry {e!r}")
        if found is None:
            found = candidate
        elif found != candidate:
            raise MixedCoefficients(f"Entries mix {found} and {candidate}")
    return found if found is not None else QQ


class Matrix:
    """rows x cols matrix stored row-major; entries are converted into ``domain``."""

    __slots__ = ("rows", "cols", "_entries", "domain")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Iterable[Any],
        domain: Optional[Domain] = None,
    ):
        values = list(entries)
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise ValueError(f"{len(values)} entries do not fill a {rows}x{cols} matrix")
        domain = domain if domain is not None else infer_domain(values)
        for v in values:
            if not domain.contains(v):
                raise MixedCoefficients(f"{v!r} is not an element of {domain}")
        self.rows = rows
        self.cols = cols
        self.domain = domain
        self._entries: tuple[Any, ...] = tuple(domain.convert(v) for v in values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], domain: Optional[Domain] = None) -> Matrix:
        if not rows:
            return cls(0, 0, (), domain)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("Ragged rows")
        return cls(len(rows), width, (e for r in rows for e in r), domain)

    @classmethod
    def identity(cls, n: int, domain: Domain = QQ) -> Matrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)), domain)

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: Domain = QQ) -> Matrix:
        return cls(rows, cols, [0] * (rows * cols), domain)

    @classmethod
    def diag(cls, values: Sequence[Any], domain: Optional[Domain] = None) -> Matrix:
        n = len(values)
        entries = [values[i] if i == j else 0 for i in range(n) for j in range(n)]
        return cls(n, n, entries, domain)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble [[B11, B12, ...], ...]; heights agree along rows, widths down columns."""
        domain = blocks[0][0].domain
        heights = [row[0].rows for row in blocks]
        widths = [b.cols for b in blocks[0]]
        out: list[list[Any]] = []
        for bi, row in enumerate(blocks):
            if [b.cols for b in row] != widths or any(b.rows != heights[bi] for b in row):
                raise ValueError("Block sizes do not line up")
            for i in range(heights[bi]):
                out.append([e for b in row for e in b.row(i)])
        return cls(sum(heights), sum(widths), (e for r in out for e in r), domain)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not any(self._entries)

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Any, ...]:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Any, ...]:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def entries(self) -> tuple[Any, ...]:
        return self._entries

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            (self[i, j] for j in range(self.cols) for i in range(self.rows)),
            self.domain,
        )

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def convert(self, domain: Domain) -> Matrix:
        return Matrix(self.rows, self.cols, self._entries, domain)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols), self.domain)

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            self.rows, self.cols, (a + b for a, b in zip(self._entries, other._entries)), self.domain
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            self.rows, self.cols, (a - b for a, b in zip(self._entries, other._entries)), self.domain
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, (-a for a in self._entries), self.domain)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        zero = self.domain.zero
        entries = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    if r[k]:
                        acc = acc + r[k] * other[k, j]
                entries.append(acc)
        return Matrix(self.rows, other.cols, entries, self.domain)

    def scale(self, c: Any) -> Matrix:
        if not self.domain.contains(c):
            raise MixedCoefficients(f"Scalar {c!r} is not in {self.domain}")
        c = self.domain.convert(c)
        return Matrix(self.rows, self.cols, (c * a for a in self._entries), self.domain)

    def __rmul__(self, c: Any) -> Matrix:
        return self.scale(c)

    def __mul__(self, c: Any) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square:
            raise NonSquare("Only square matrices have powers")
        if k < 0:
            raise ValueError("Negative matrix powers are not supported")
        result = Matrix.identity(self.rows, self.domain)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def format(self) -> str:
        """Bracketed rows with right-aligned columns."""
        if self.rows == 0 or self.cols == 0:
            return "[]"
        cells = [[self.domain.format(e) for e in self.row(i)] for i in range(self.rows)]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = [
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in cells
        ]
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.domain}, {self.tolist()!r})"
