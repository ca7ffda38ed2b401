"""Laurent polynomials over the rationals, stored dense with an offset."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from typing import NamedTuple

from algebra.errors import DivisionByZero, InexactDivision, ZeroPolynomial
from algebra.polynomial import Poly, Scalar, _fraction, format_terms


class LaurentNormalForm(NamedTuple):
    """f = constant * t**exponent * primitive, primitive monic with nonzero constant term."""

    exponent: int
    primitive: Poly
    constant: Fraction


class LaurentPoly:
    """Element of Q[t, t^-1]: sum of coeffs[i] * t**(offset + i)."""

    __slots__ = ("_offset", "_coeffs")

    def __init__(self, coeffs: Iterable[Scalar] = (), offset: int = 0):
        cs = [_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        self._coeffs: tuple[Fraction, ...] = tuple(cs)
        self._offset = offset + lead if cs else 0

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls((1,), 1)

    @classmethod
    def constant(cls, c: Scalar) -> LaurentPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> LaurentPoly:
        return cls((c,), k)

    @classmethod
    def from_poly(cls, p: Poly) -> LaurentPoly:
        return cls(p.coeffs)

    @classmethod
    def coerce(cls, value: LaurentPoly | Poly | Scalar) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Poly):
            return cls.from_poly(value)
        return cls.constant(value)

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def low_degree(self) -> int:
        return self._offset

    @property
    def high_degree(self) -> int:
        return self._offset + len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_unit(self) -> bool:
        return len(self._coeffs) == 1

    def coefficient(self, k: int) -> Fraction:
        i = k - self._offset
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LaurentPoly, Poly, int, Fraction)):
            o = LaurentPoly.coerce(other)
            return self._offset == o._offset and self._coeffs == o._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._offset == 0 and len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(("LaurentPoly", self._offset, self._coeffs))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((-c for c in self._coeffs), self._offset)

    def __add__(self, other: LaurentPoly | Poly | Scalar) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, Poly, int, Fraction)):
            return NotImplemented
        o = LaurentPoly.coerce(other)
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        low = min(self.low_degree, o.low_degree)
        high = max(self.high_degree, o.high_degree)
        return LaurentPoly(
            (self.coefficient(k) + o.coefficient(k) for k in range(low, high + 1)), low
        )

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | Poly | Scalar) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, Poly, int, Fraction)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Poly | Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: LaurentPoly | Poly | Scalar) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, Poly, int, Fraction)):
            return NotImplemented
        o = LaurentPoly.coerce(other)
        product = Poly(self._coeffs) * Poly(o._coeffs)
        return LaurentPoly(product.coeffs, self._offset + o._offset)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit c*t^k."""
        if self.is_zero:
            raise DivisionByZero("Zero Laurent polynomial has no inverse")
        if not self.is_unit:
            raise InexactDivision(f"{self} is not a unit of Q[t, t^-1]")
        return LaurentPoly((1 / self._coeffs[0],), -self._offset)

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly(self._coeffs, self._offset + k)

    def __call__(self, x):
        if self.is_zero:
            return Fraction(0)
        return Poly(self._coeffs)(x) * x**self._offset

    def derivative(self) -> LaurentPoly:
        return LaurentPoly(
            ((self._offset + i) * c for i, c in enumerate(self._coeffs)), self._offset - 1
        )

    def to_poly(self) -> Poly:
        if self.is_zero:
            return Poly()
        if self._offset < 0:
            raise ValueError(f"{self} has negative exponents")
        return Poly([0] * self._offset + list(self._coeffs))

    def normalize(self) -> LaurentNormalForm:
        if self.is_zero:
            raise ZeroPolynomial("Cannot normalize the zero Laurent polynomial")
        body = Poly(self._coeffs)
        return LaurentNormalForm(self._offset, body.monic(), body.leading)

    def exquo(self, other: LaurentPoly | Poly | Scalar) -> LaurentPoly:
        """Exact quotient modulo units: t-powers are invertible in Q[t, t^-1]."""
        o = LaurentPoly.coerce(other)
        if o.is_zero:
            raise DivisionByZero("Laurent division by zero")
        if self.is_zero:
            return self
        q, r = divmod(Poly(self._coeffs), Poly(o._coeffs))
        if not r.is_zero:
            raise InexactDivision(f"{o} does not divide {self}")
        return LaurentPoly(q.coeffs, self._offset - o._offset)

    def terms(self) -> list[tuple[Fraction, int]]:
        return [
            (c, self._offset + i) for i, c in reversed(list(enumerate(self._coeffs))) if c != 0
        ]

    def format(self, var: str = "t") -> str:
        return format_terms(self.terms(), var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({[str(c) for c in self._coeffs]}, offset={self._offset})"


def laurent_normalize(f: LaurentPoly) -> LaurentNormalForm:
    """Split f into unit part c*t^k and a monic polynomial with nonzero constant term."""
    return f.normalize()
