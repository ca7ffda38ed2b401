"""Exceptions raised by the exact algebra layer."""


class AlgebraError(Exception):
    """Base class for exact-arithmetic failures."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Inverse or quotient of a zero element was requested."""


class InexactDivision(AlgebraError, ArithmeticError):
    """An exact quotient was requested but the divisor does not divide."""


class ZeroPolynomial(AlgebraError, ValueError):
    """Operation is undefined on the zero polynomial."""


class NotSquarefree(AlgebraError, ValueError):
    """Polynomial has a repeated factor where a squarefree one is required."""


class NotIrreducible(AlgebraError, ValueError):
    """Number-field modulus is reducible over the rationals."""


class FactorizationTooLarge(AlgebraError, ValueError):
    """Kronecker search refused because the degree exceeds the configured limit."""


class MixedCoefficients(AlgebraError, TypeError):
    """Matrix entries do not share one coefficient structure."""


class NotAField(AlgebraError, TypeError):
    """A field operation was requested over a ring that is not a field."""


class DegreeOutOfRange(AlgebraError, ValueError):
    """Exterior degree or cohomological degree outside the admissible range."""


class NonSquare(AlgebraError, ValueError):
    """A square matrix is required."""
