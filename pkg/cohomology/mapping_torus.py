"""Algebraic model of the mapping torus T^n x_A S^1 and the twists it carries.

The monodromy A is taken as the action on H^1 of the fiber torus in the
basis dx_1..dx_n; the induced action on H^k is the k-th exterior power of A.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union

from algebra.domains import QQ
from algebra.exterior import exterior_power
from algebra.errors import FactorizationTooLarge
from algebra.factor import DEFAULT_MAX_DEGREE, poly_factor
from algebra.linalg import charpoly, det
from algebra.matrix import Matrix
from algebra.polynomial import Poly
from algebra.roots import RealRootLabel, isolate_real_roots, root_sort_key
from cohomology.errors import (
    InvalidMonodromy,
    InvalidTwist,
    NotUnimodular,
    RootSelectionError,
)

logger = logging.getLogger(__name__)

MatrixLike = Union[Matrix, Sequence[Sequence[Any]]]


class TwistKind(str, Enum):
    UNTWISTED = "untwisted"
    RATIONAL = "rational"
    LEE = "lee"
    TRANSCENDENTAL = "transcendental"


@dataclass(frozen=True)
class TwistSpec:
    """The closed one-form s*dt on the base circle, encoded by lambda = e^s."""

    kind: TwistKind
    weight: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.kind is TwistKind.RATIONAL:
            if self.weight is None or self.weight == 0:
                raise InvalidTwist("A rational twist needs a nonzero weight")
            if self.weight < 0:
                logger.warning(
                    f"Negative weight {self.weight} is not e^s for a real s; "
                    "computing with the rank-one local system anyway"
                )
        elif self.weight is not None:
            raise InvalidTwist(f"Twist {self.kind.value} takes no weight")

    @classmethod
    def untwisted(cls) -> TwistSpec:
        return cls(TwistKind.UNTWISTED)

    @classmethod
    def rational(cls, weight: Union[int, Fraction, str]) -> TwistSpec:
        try:
            value = Fraction(weight)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidTwist(f"Bad rational weight {weight!r}: {e}") from e
        return cls(TwistKind.RATIONAL, value)

    @classmethod
    def lee(cls) -> TwistSpec:
        return cls(TwistKind.LEE)

    @classmethod
    def transcendental(cls) -> TwistSpec:
        return cls(TwistKind.TRANSCENDENTAL)

    @classmethod
    def parse(cls, text: str) -> TwistSpec:
        """Parse ``untwisted``, ``rational:<p/q>``, ``lee`` or ``transcendental``."""
        head, _, tail = text.strip().partition(":")
        head = head.lower()
        if head == TwistKind.RATIONAL.value:
            if not tail:
                raise InvalidTwist("Expected rational:<p/q>")
            return cls.rational(tail.strip())
        if tail:
            raise InvalidTwist(f"Twist {head!r} takes no parameter")
        try:
            kind = TwistKind(head)
        except ValueError as e:
            choices = ", ".join(k.value for k in TwistKind)
            raise InvalidTwist(f"Unknown twist {text!r}; expected one of {choices}") from e
        return cls(kind)

    @property
    def is_trivial(self) -> bool:
        """lambda = 1: the twisting form is exact."""
        return self.kind is TwistKind.UNTWISTED or (
            self.kind is TwistKind.RATIONAL and self.weight == 1
        )

    def __str__(self) -> str:
        if self.kind is TwistKind.RATIONAL:
            return f"rational:{self.weight}"
        return self.kind.value


@dataclass(frozen=True)
class MappingTorus:
    """Monodromy with its characteristic-polynomial data."""

    n: int
    monodromy: Matrix
    determinant: int
    charpoly: Poly
    factors: tuple[tuple[Poly, int], ...]
    modulus: Optional[Poly] = None
    alpha_label: Optional[RealRootLabel] = None
    expanding_roots: tuple[RealRootLabel, ...] = ()
    warnings: tuple[str, ...] = field(default_factory=tuple)
    factored: bool = True

    @property
    def orientable(self) -> bool:
        return self.determinant == 1

    @property
    def has_lee_eigenvalue(self) -> bool:
        return self.modulus is not None


@dataclass(frozen=True)
class InducedMaps:
    """M_k = k-th exterior power of A acting on H^k(T^n), k = 0..n."""

    maps: tuple[Matrix, ...]

    def __getitem__(self, k: int) -> Matrix:
        return self.maps[k]

    def __len__(self) -> int:
        return len(self.maps)


@dataclass(frozen=True)
class PeriodGroup:
    """Free abelian group of periods of the twisting form."""

    rank: int
    generators: tuple[str, ...]


def _as_integer_matrix(a: MatrixLike) -> Matrix:
    try:
        m = a if isinstance(a, Matrix) else Matrix.from_rows([list(r) for r in a], QQ)
    except (TypeError, ValueError) as e:
        raise InvalidMonodromy(f"Monodromy is not a rational matrix: {e}") from e
    if m.domain != QQ:
        raise InvalidMonodromy(f"Monodromy entries must be integers, got {m.domain}")
    if not m.is_square or m.rows == 0:
        raise InvalidMonodromy(f"Monodromy must be a nonempty square matrix, got {m.shape}")
    if any(e.denominator != 1 for e in m.entries):
        raise InvalidMonodromy("Monodromy entries must be integers")
    return m


def build(
    a: MatrixLike,
    root_select: Optional[int] = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> MappingTorus:
    """Validate A, factor its characteristic polynomial and label the Lee eigenvalue.

    Args:
        a: Square integer matrix with determinant +1 or -1.
        root_select: Index into the real roots > 1 in decreasing order; the
            default picks the largest.
        max_degree: Degree limit handed to the factorizer.

    Raises:
        InvalidMonodromy: A is not a square integer matrix.
        NotUnimodular: |det A| != 1.
        RootSelectionError: root_select does not index a root > 1.

    A characteristic polynomial with an irreducible factor above ``max_degree`` is
    left unfactored: the result has ``factored=False``, no modulus and a warning.
    """
    m = _as_integer_matrix(a)
    d = det(m)
    if abs(d) != 1:
        raise NotUnimodular(f"det A = {d}; the monodromy must be invertible over the integers")
    cp = charpoly(m)
    warnings: list[str] = []
    factored = True
    try:
        factors = tuple(poly_factor(cp, max_degree))
    except FactorizationTooLarge as e:
        # Only the Lee twist needs the modulus; the other twists work over Q or Q(lambda).
        factors = ()
        factored = False
        warnings.append(f"charpoly not factored ({e}); the Lee twist is unavailable")
    if d == -1:
        warnings.append("det A = -1: the mapping torus is non-orientable")
        logger.warning("Monodromy with det -1 accepted; mapping torus is non-orientable")

    expanding = []
    for f, _ in factors:
        for root in isolate_real_roots(f):
            if root.compare(Fraction(1)) > 0:
                expanding.append(root)
    expanding.sort(key=root_sort_key, reverse=True)

    modulus = None
    label = None
    if root_select is not None and not 0 <= root_select < len(expanding):
        raise RootSelectionError(
            f"Root index {root_select} out of range; {len(expanding)} real root(s) > 1"
        )
    if expanding:
        label = expanding[root_select or 0]
        modulus = label.modulus
        logger.debug(f"Selected Lee eigenvalue: {label}")
    else:
        logger.debug(f"No real eigenvalue > 1 for charpoly {cp}")

    return MappingTorus(
        n=m.rows,
        monodromy=m,
        determinant=int(d),
        charpoly=cp,
        factors=factors,
        modulus=modulus,
        alpha_label=label,
        expanding_roots=tuple(expanding),
        warnings=tuple(warnings),
        factored=factored,
    )


def induced_maps(mt: MappingTorus) -> InducedMaps:
    return InducedMaps(tuple(exterior_power(mt.monodromy, k) for k in range(mt.n + 1)))


def period_group(mt: MappingTorus, tw: TwistSpec) -> PeriodGroup:
    """Periods of theta = s*dt are s*Z: rank one unless theta is exact."""
    if tw.is_trivial:
        return PeriodGroup(0, ())
    if tw.kind is TwistKind.RATIONAL:
        return PeriodGroup(1, (f"ln({tw.weight})",))
    if tw.kind is TwistKind.LEE:
        return PeriodGroup(1, ("ln(alpha)",))
    return PeriodGroup(1, ("s, e^s transcendental",))


def random_unimodular(n: int, rng: random.Random, steps: Optional[int] = None) -> Matrix:
    """Random product of elementary integer matrices, a row swap and a sign flip.

    Entries stay small for the default number of steps; the determinant is
    +1 or -1.
    """
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice((-1, 1))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    if rng.random() < 0.5:
        k = rng.randrange(n)
        rows[k] = [-x for x in rows[k]]
    return Matrix.from_rows(rows, QQ)


def companion3(a: int, b: int) -> Matrix:
    """Companion matrix of x^3 - a x^2 + b x - 1."""
    return Matrix.from_rows([[0, 0, 1], [1, 0, -b], [0, 1, a]], QQ)


def is_inoue_type(mt: MappingTorus) -> bool:
    """A in SL_3(Z) with irreducible charpoly, one real root, and that root > 1."""
    if mt.n != 3 or mt.determinant != 1 or not mt.factored:
        return False
    if len(mt.factors) != 1 or mt.factors[0][1] != 1:
        return False
    roots = isolate_real_roots(mt.charpoly)
    return len(roots) == 1 and roots[0].compare(Fraction(1)) > 0


def inoue_candidates(limit: int = 10, bound: int = 4) -> list[Matrix]:
    """Companion matrices of x^3 - a x^2 + b x - 1, |a|, |b| <= bound, of Inoue type."""
    pairs = sorted(
        ((a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)),
        key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab),
    )
    found = []
    for a, b in pairs:
        m = companion3(a, b)
        if is_inoue_type(build(m)):
            found.append(m)
            if len(found) == limit:
                break
    logger.debug(f"Found {len(found)} Inoue-type monodromies with |a|, |b| <= {bound}")
    return found
