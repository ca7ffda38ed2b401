"""Twisted cohomology of mapping tori from the Mayer-Vietoris (Wang) sequence.

With nu_k = nullity(I - lambda * M_k), the long exact sequence splits into
0 -> coker(I - lambda M_{i-1}) -> H^i -> ker(I - lambda M_i) -> 0, hence
dim H^i = nu_{i-1} + nu_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Optional

from algebra.domains import QQ, Domain, RationalFunctionField
from algebra.errors import DegreeOutOfRange
from algebra.linalg import rank_nullity
from algebra.matrix import Matrix
from algebra.number_field import NumberField
from cohomology.checks import CheckResult
from cohomology.errors import InvariantViolation, ModeUnavailable, RootSelectionError
from cohomology.mapping_torus import (
    MappingTorus,
    PeriodGroup,
    TwistKind,
    TwistSpec,
    induced_maps,
    period_group,
)

logger = logging.getLogger(__name__)

DEFAULT_ALPHA_DIGITS = 12


@dataclass(frozen=True)
class CoefficientField:
    """Field the twisted complex is computed over, with lambda as one of its elements."""

    domain: Domain
    weight: Any
    description: str


def coefficient_field(mt: MappingTorus, tw: TwistSpec) -> CoefficientField:
    if tw.kind is TwistKind.UNTWISTED:
        return CoefficientField(QQ, QQ.one, "Q")
    if tw.kind is TwistKind.RATIONAL:
        return CoefficientField(QQ, QQ.convert(tw.weight), "Q")
    if tw.kind is TwistKind.LEE:
        if not mt.factored:
            raise RootSelectionError(
                f"Lee twist needs the factors of charpoly {mt.charpoly}, which were not computed"
            )
        if mt.modulus is None:
            raise ModeUnavailable(
                f"Lee twist needs a real eigenvalue > 1; charpoly {mt.charpoly} has none"
            )
        nf = NumberField(mt.modulus, name="alpha", check=False)
        return CoefficientField(nf, nf.generator, str(nf))
    field = RationalFunctionField("lambda")
    return CoefficientField(field, field.generator, f"{field} (lambda transcendental)")


def twist_block(m_k: Matrix, field: CoefficientField) -> Matrix:
    """I - lambda * M_k over the coefficient field."""
    m = m_k.convert(field.domain)
    return Matrix.identity(m.rows, field.domain) - m.scale(field.weight)


@dataclass(frozen=True)
class GammaMap:
    """Block matrix [[I, -I], [I, -lambda M_k]] of the Mayer-Vietoris map in degree k."""

    degree: int
    matrix: Matrix
    twist_block: Matrix

    @property
    def rank(self) -> int:
        return rank_nullity(self.matrix).rank


def gamma_matrix(mt: MappingTorus, tw: TwistSpec, k: int) -> GammaMap:
    if not 0 <= k <= mt.n:
        raise DegreeOutOfRange(f"Degree {k} outside 0..{mt.n}")
    field = coefficient_field(mt, tw)
    m = induced_maps(mt)[k].convert(field.domain)
    ident = Matrix.identity(m.rows, field.domain)
    block = Matrix.block([[ident, -ident], [ident, -m.scale(field.weight)]])
    return GammaMap(k, block, twist_block(induced_maps(mt)[k], field))


@dataclass(frozen=True)
class CohomologyReport:
    n: int
    dims: tuple[int, ...]
    nullities: tuple[int, ...]
    euler: int
    twist: TwistSpec
    field: str
    orientable: bool
    period: PeriodGroup
    alpha_approx: Optional[str] = None
    gamma: tuple[GammaMap, ...] = ()
    warnings: tuple[str, ...] = ()
    method: str = "Mayer-Vietoris nullity formula"


def dims_from_nullities(nullities: list[int]) -> list[int]:
    padded = [0, *nullities, 0]
    return [padded[i] + padded[i + 1] for i in range(len(nullities) + 1)]


def euler_characteristic(dims: list[int]) -> int:
    return sum(d if i % 2 == 0 else -d for i, d in enumerate(dims))


def twisted_cohomology(
    mt: MappingTorus,
    tw: TwistSpec,
    audit: bool = False,
    alpha_digits: int = DEFAULT_ALPHA_DIGITS,
) -> CohomologyReport:
    """Dimensions of H^i_theta(M), i = 0..n+1.

    Args:
        mt: Mapping torus from ``build``.
        tw: Twist; ``lee`` needs ``mt.modulus``.
        audit: Also return the gamma block matrices, checking each one's rank
            against 2*C(n,k) - nu_k.
        alpha_digits: Decimal places of the Lee eigenvalue in the report.

    Raises:
        ModeUnavailable: Lee twist without a real eigenvalue > 1.
        InvariantViolation: Euler characteristic or audit rank mismatch.
    """
    field = coefficient_field(mt, tw)
    maps = induced_maps(mt)
    nullities = [rank_nullity(twist_block(maps[k], field)).nullity for k in range(mt.n + 1)]
    dims = dims_from_nullities(nullities)
    euler = euler_characteristic(dims)
    logger.debug(f"twist={tw} field={field.description} nullities={nullities} dims={dims}")
    if euler != 0:
        raise InvariantViolation(f"Euler characteristic {euler} != 0 for dims {dims}")

    gamma: list[GammaMap] = []
    if audit:
        for k in range(mt.n + 1):
            g = gamma_matrix(mt, tw, k)
            expected = 2 * comb(mt.n, k) - nullities[k]
            if g.rank != expected:
                raise InvariantViolation(
                    f"gamma block in degree {k} has rank {g.rank}, expected {expected}"
                )
            gamma.append(g)

    alpha_approx = None
    if tw.kind is TwistKind.LEE and mt.alpha_label is not None:
        alpha_approx = mt.alpha_label.approximate(alpha_digits)

    warnings = list(mt.warnings)
    if tw.kind is TwistKind.RATIONAL and tw.weight is not None and tw.weight < 0:
        warnings.append(f"negative weight {tw.weight} does not come from a real closed form")

    return CohomologyReport(
        n=mt.n,
        dims=tuple(dims),
        nullities=tuple(nullities),
        euler=euler,
        twist=tw,
        field=field.description,
        orientable=mt.orientable,
        period=period_group(mt, tw),
        alpha_approx=alpha_approx,
        gamma=tuple(gamma),
        warnings=tuple(warnings),
    )


def vanishing_check(report: CohomologyReport) -> CheckResult:
    """Euler characteristic zero; H^0 and H^top vanish for a non-exact twist.

    H^0 is only asserted when lambda != 1, and the top degree additionally
    needs an orientable mapping torus.
    """
    failures = []
    skipped = []
    if report.euler != 0:
        failures.append(f"euler characteristic {report.euler}")
    if report.twist.is_trivial:
        skipped.append("H^0/H^top vanishing (theta exact)")
    else:
        if report.dims[0] != 0:
            failures.append(f"dim H^0 = {report.dims[0]}")
        if not report.orientable:
            skipped.append("H^top vanishing (non-orientable)")
        elif report.dims[-1] != 0:
            failures.append(f"dim H^{report.n + 1} = {report.dims[-1]}")
    return CheckResult(
        name="vanishing",
        success=not failures,
        output=list(report.dims),
        error="; ".join(failures) or None,
        metadata={"skipped": skipped},
    )


def duality_check(mt: MappingTorus, tw: TwistSpec) -> CheckResult:
    """dims(lambda)[i] == dims(det(A)/lambda)[n+1-i] for a rational twist."""
    if tw.kind is TwistKind.UNTWISTED:
        weight = Fraction(1)
    elif tw.kind is TwistKind.RATIONAL and tw.weight is not None:
        weight = tw.weight
    else:
        raise ModeUnavailable(f"Duality is checked for rational weights, not {tw}")
    dual = TwistSpec.rational(Fraction(mt.determinant) / weight)
    dims = twisted_cohomology(mt, tw).dims
    dual_dims = twisted_cohomology(mt, dual).dims
    ok = dims == tuple(reversed(dual_dims))
    return CheckResult(
        name="duality",
        success=ok,
        output={"dims": list(dims), "dual_dims": list(dual_dims)},
        error=None if ok else f"{list(dims)} is not the reverse of {list(dual_dims)}",
        metadata={"dual_twist": str(dual)},
    )
