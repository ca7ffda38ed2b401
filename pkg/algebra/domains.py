"""Coefficient structures that matrices are built over."""

from __future__ import annotations

import abc
from fractions import Fraction
from typing import Any

from algebra.errors import DivisionByZero
from algebra.laurent import LaurentPoly
from algebra.polynomial import Poly
from algebra.rational_function import RationalFunction


def _is_rational(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class Domain(abc.ABC):
    """An exact integral domain; fields additionally support ``/``."""

    name: str
    is_field: bool = False

    @abc.abstractmethod
    def contains(self, value: Any) -> bool:
        """Whether value is an element, or an integer/rational that embeds."""

    @abc.abstractmethod
    def convert(self, value: Any) -> Any:
        """Embed value as an element of this domain."""

    @abc.abstractmethod
    def exquo(self, a: Any, b: Any) -> Any:
        """Exact quotient a / b, assuming b divides a."""

    @property
    def zero(self) -> Any:
        return self.convert(0)

    @property
    def one(self) -> Any:
        return self.convert(1)

    def is_zero(self, a: Any) -> bool:
        return not a

    def format(self, a: Any) -> str:
        return str(a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    def __str__(self) -> str:
        return self.name


class RationalField(Domain):
    name = "Q"
    is_field = True

    def contains(self, value: Any) -> bool:
        return _is_rational(value)

    def convert(self, value: Any) -> Fraction:
        if not _is_rational(value):
            raise TypeError(f"{value!r} is not a rational number")
        return Fraction(value)

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise DivisionByZero("Rational division by zero")
        return Fraction(a) / b

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


class PolynomialRing(Domain):
    """Q[var], a Euclidean domain."""

    def __init__(self, var: str = "x"):
        self.var = var
        self.name = f"Q[{var}]"

    def contains(self, value: Any) -> bool:
        return isinstance(value, Poly) or _is_rational(value)

    def convert(self, value: Any) -> Poly:
        return Poly.coerce(value)

    def exquo(self, a: Poly, b: Poly) -> Poly:
        return a.exquo(b)

    def format(self, a: Poly) -> str:
        return a.format(self.var)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and other.var == self.var

    def __hash__(self) -> int:
        return hash(("PolynomialRing", self.var))


class LaurentRing(Domain):
    """Q[var, var^-1]; units are c*var^k."""

    def __init__(self, var: str = "t"):
        self.var = var
        self.name = f"Q[{var}, {var}^-1]"

    def contains(self, value: Any) -> bool:
        return isinstance(value, (LaurentPoly, Poly)) or _is_rational(value)

    def convert(self, value: Any) -> LaurentPoly:
        return LaurentPoly.coerce(value)

    def exquo(self, a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
        return a.exquo(b)

    def format(self, a: LaurentPoly) -> str:
        return a.format(self.var)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentRing) and other.var == self.var

    def __hash__(self) -> int:
        return hash(("LaurentRing", self.var))


class RationalFunctionField(Domain):
    """Q(var): the field in which a transcendental twist is an honest indeterminate."""

    is_field = True

    def __init__(self, var: str = "lambda"):
        self.var = var
        self.name = f"Q({var})"

    def contains(self, value: Any) -> bool:
        return isinstance(value, (RationalFunction, Poly)) or _is_rational(value)

    def convert(self, value: Any) -> RationalFunction:
        return RationalFunction.coerce(value)

    def exquo(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        return a / b

    @property
    def generator(self) -> RationalFunction:
        return RationalFunction.indeterminate()

    def format(self, a: RationalFunction) -> str:
        return a.format(self.var)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self) -> int:
        return hash(("RationalFunctionField", self.var))
