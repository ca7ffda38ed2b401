"""Number fields Q(alpha) = Q[x]/(q) for an irreducible rational polynomial q."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from algebra.domains import Domain
from algebra.errors import DivisionByZero, NotIrreducible
from algebra.factor import is_irreducible
from algebra.polynomial import Poly, Scalar

ElementLike = Union["NumberFieldElement", Poly, int, Fraction]


class NumberField(Domain):
    """The field Q[x]/(modulus); ``name`` is used when printing elements."""

    is_field = True

    def __init__(self, modulus: Poly, name: str = "alpha", check: bool = True):
        if modulus.degree < 1:
            raise NotIrreducible(f"Modulus {modulus} must have positive degree")
        if check and not is_irreducible(modulus):
            raise NotIrreducible(f"{modulus} is reducible over Q")
        self.modulus = modulus.monic()
        self.name = name

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __call__(self, value: ElementLike) -> NumberFieldElement:
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise ValueError("Element belongs to a different number field")
            return value
        return NumberFieldElement(Poly.coerce(value), self)

    def contains(self, value: object) -> bool:
        if isinstance(value, NumberFieldElement):
            return value.field == self
        return isinstance(value, (Poly, int, Fraction)) and not isinstance(value, bool)

    def convert(self, value: ElementLike) -> NumberFieldElement:
        return self(value)

    def exquo(self, a: NumberFieldElement, b: NumberFieldElement) -> NumberFieldElement:
        return self(a) / self(b)

    @property
    def zero(self) -> NumberFieldElement:
        return self(0)

    @property
    def one(self) -> NumberFieldElement:
        return self(1)

    @property
    def generator(self) -> NumberFieldElement:
        return self(Poly.x())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("NumberField", self.modulus))

    def __repr__(self) -> str:
        return f"NumberField({self.modulus.format(self.name)})"

    def __str__(self) -> str:
        return f"Q({self.name}) = Q[x]/({self.modulus})"


class NumberFieldElement:
    """Residue class of a polynomial modulo the field's modulus."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: Poly, field: NumberField):
        self.residue = residue % field.modulus
        self.field = field

    def _coerce(self, other: object) -> NumberFieldElement | None:
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError("Cannot combine elements of different number fields")
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return NumberFieldElement(Poly.coerce(other), self.field)
        return None

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    def __bool__(self) -> bool:
        return not self.residue.is_zero

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self) -> int:
        if self.residue.degree <= 0:
            return hash(self.residue)
        return hash((self.residue, self.field))

    def __neg__(self) -> NumberFieldElement:
        return NumberFieldElement(-self.residue, self.field)

    def __add__(self, other: ElementLike) -> NumberFieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.residue + o.residue, self.field)

    __radd__ = __add__

    def __sub__(self, other: ElementLike) -> NumberFieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.residue - o.residue, self.field)

    def __rsub__(self, other: Scalar) -> NumberFieldElement:
        return -self + other

    def __mul__(self, other: ElementLike) -> NumberFieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.residue * o.residue, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> NumberFieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> NumberFieldElement:
        """Extended Euclid on (residue, modulus)."""
        if self.is_zero:
            raise DivisionByZero("Zero has no inverse in a number field")
        g, s, _ = Poly.xgcd(self.residue, self.field.modulus)
        if g != 1:
            raise NotIrreducible(f"{self.residue} shares the factor {g} with the modulus")
        return NumberFieldElement(s, self.field)

    def __truediv__(self, other: ElementLike) -> NumberFieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> NumberFieldElement:
        return self.inverse() * other

    def __str__(self) -> str:
        return self.residue.format(self.field.name)

    def __repr__(self) -> str:
        return f"NumberFieldElement({self}, {self.field!r})"


def nf_inverse(a: NumberFieldElement) -> NumberFieldElement:
    return a.inverse()
