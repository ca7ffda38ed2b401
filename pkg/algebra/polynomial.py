"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from algebra.errors import DivisionByZero, InexactDivision

Scalar = Union[int, Fraction]


def _fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


def format_terms(terms: Sequence[tuple[Fraction, int]], var: str) -> str:
    """Render (coefficient, exponent) pairs, highest exponent first."""
    if not terms:
        return "0"
    pieces: list[str] = []
    for coeff, exp in terms:
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if exp == 0:
            body = str(magnitude)
        else:
            power = var if exp == 1 else f"{var}^{exp}"
            if magnitude == 1:
                body = power
            elif magnitude.denominator == 1:
                body = f"{magnitude}*{power}"
            else:
                body = f"({magnitude})*{power}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


class Poly:
    """Polynomial with Fraction coefficients, lowest degree first.

    Instances are immutable; trailing zero coefficients are stripped so the
    leading coefficient is nonzero unless the polynomial is zero.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Poly:
        result = cls.constant(1)
        for r in roots:
            result = result * cls((-_fraction(r), 1))
        return result

    @classmethod
    def coerce(cls, value: Poly | Scalar) -> Poly:
        if isinstance(value, Poly):
            return value
        return cls.constant(value)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(("Poly", self._coeffs))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __pos__(self) -> Poly:
        return self

    def __add__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        o = Poly.coerce(other)
        n = max(len(self._coeffs), len(o._coeffs))
        return Poly(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: Scalar) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            c = _fraction(other)
            return Poly(c * a for a in self._coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly | Scalar) -> tuple[Poly, Poly]:
        divisor = Poly.coerce(other)
        if divisor.is_zero:
            raise DivisionByZero("Polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        lc = divisor.leading
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd] / lc
            quot[shift] = c
            if c:
                for i, b in enumerate(divisor._coeffs):
                    rem[shift + i] -= c * b
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other: Poly | Scalar) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly | Scalar) -> Poly:
        return divmod(self, other)[1]

    def __truediv__(self, other: Scalar) -> Poly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise DivisionByZero("Polynomial divided by zero scalar")
        return self * (1 / _fraction(other))

    def exquo(self, other: Poly | Scalar) -> Poly:
        """Exact quotient; raises InexactDivision when a remainder is left."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise InexactDivision(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # ------------------------------------------------------------------
    # Calculus and normalization
    # ------------------------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(0)
        den = 1
        for c in self._coeffs:
            den = lcm(den, c.denominator)
        num = 0
        for c in self._coeffs:
            num = gcd(num, int(c * den))
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Integer-coefficient primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return self * (1 / c)

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self._coeffs:
            if c.denominator != 1:
                raise ValueError(f"{self} has non-integer coefficients")
            out.append(c.numerator)
        return out

    # ------------------------------------------------------------------
    # Euclid
    # ------------------------------------------------------------------

    @staticmethod
    def gcd(a: Poly, b: Poly) -> Poly:
        """Monic greatest common divisor (zero when both inputs are zero)."""
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    @staticmethod
    def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
        """Return (g, s, t) with s*a + t*b = g and g monic."""
        r0, r1 = a, b
        s0, s1 = Poly.constant(1), Poly()
        t0, t1 = Poly(), Poly.constant(1)
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero:
            return r0, s0, t0
        inv = 1 / r0.leading
        return r0 * inv, s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        return Poly.gcd(self, self.derivative()).degree <= 0

    # ------------------------------------------------------------------
    # Display
    # ------------------------------------------------------------------

    def terms(self) -> list[tuple[Fraction, int]]:
        return [(c, k) for k, c in reversed(list(enumerate(self._coeffs))) if c != 0]

    def format(self, var: str = "x") -> str:
        return format_terms(self.terms(), var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"


def interpolate(points: Sequence[Scalar], values: Sequence[Scalar]) -> Poly:
    """Lagrange interpolation through (points[i], values[i])."""
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    result = Poly()
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi == 0:
            continue
        basis = Poly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = basis * Poly((-_fraction(xj), 1))
            denom *= _fraction(xi) - _fraction(xj)
        result = result + basis * (_fraction(yi) / denom)
    return result
