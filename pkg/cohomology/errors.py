"""Exceptions raised by the cohomology layer."""


class CohomologyError(Exception):
    """Base class for mapping-torus and form computations."""


class InvalidMonodromy(CohomologyError, ValueError):
    """Monodromy is not a square integer matrix."""


class NotUnimodular(InvalidMonodromy):
    """Monodromy determinant is not +1 or -1."""


class ModeUnavailable(CohomologyError, ValueError):
    """Requested twist needs data the mapping torus does not carry."""


class RootSelectionError(CohomologyError, ValueError):
    """Root-selection index does not name a real root greater than 1."""


class ThetaNotClosed(CohomologyError, ValueError):
    """Twisting one-form is not closed."""


class DegreeOverflow(CohomologyError, ValueError):
    """Wedge product would exceed the top degree."""


class InvariantViolation(CohomologyError):
    """An internal consistency check failed."""


class NotAComplex(InvariantViolation):
    """Consecutive coboundaries do not compose to zero."""


class InvalidTwist(CohomologyError, ValueError):
    """Twist string is malformed or has a zero weight."""
