"""The rational function field Q(lambda) in one indeterminate."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from algebra.errors import DivisionByZero
from algebra.laurent import LaurentPoly
from algebra.polynomial import Poly

FunctionLike = Union["RationalFunction", Poly, int, Fraction]


class RationalFunction:
    """num/den in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        den = Poly.constant(1) if den is None else den
        if den.is_zero:
            raise DivisionByZero("Rational function with zero denominator")
        g = Poly.gcd(num, den)
        if not num.is_zero and g.degree > 0:
            num, den = num.exquo(g), den.exquo(g)
        if num.is_zero:
            den = Poly.constant(1)
        lc = den.leading
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    @classmethod
    def indeterminate(cls) -> RationalFunction:
        return cls(Poly.x())

    @classmethod
    def coerce(cls, value: FunctionLike | LaurentPoly) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, LaurentPoly):
            return cls.from_laurent(value)
        return cls(Poly.coerce(value))

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> RationalFunction:
        body = Poly(f.coeffs)
        if f.offset >= 0:
            return cls(body * Poly.monomial(1, f.offset))
        return cls(body, Poly.monomial(1, -f.offset))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den == 1:
            return hash(self.num)
        return hash(("RationalFunction", self.num, self.den))

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other: FunctionLike) -> RationalFunction:
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: FunctionLike) -> RationalFunction:
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other: FunctionLike) -> RationalFunction:
        return RationalFunction.coerce(other) - self

    def __mul__(self, other: FunctionLike) -> RationalFunction:
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero:
            raise DivisionByZero("Zero has no inverse in Q(lambda)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: FunctionLike) -> RationalFunction:
        if not isinstance(other, (RationalFunction, Poly, int, Fraction)):
            return NotImplemented
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other: FunctionLike) -> RationalFunction:
        return RationalFunction.coerce(other) * self.inverse()

    def format(self, var: str = "lambda") -> str:
        if self.den == 1:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"
