"""Conversion of library results into report models."""

from typing import Any, Optional

from algebra.linalg import rank_nullity
from algebra.matrix import Matrix
from cohomology.checks import CheckResult
from cohomology.mapping_torus import MappingTorus, PeriodGroup, TwistSpec
from cohomology.mv_engine import CohomologyReport, GammaMap
from cohomology.novikov import NovikovInvariants

from mnk.models import (
    CheckModel,
    CohomologyReportModel,
    GammaBlockModel,
    LcsReportModel,
    NovikovReportModel,
    OracleReportModel,
    TwistModel,
)


def matrix_strings(m: Matrix) -> list[list[str]]:
    return [[m.domain.format(e) for e in row] for row in m.tolist()]


def integer_rows(m: Matrix) -> list[list[int]]:
    return [[int(e) for e in row] for row in m.tolist()]


def _jsonable(value: Any) -> Any:
    if isinstance(value, CheckResult):
        return check_model(value).model_dump()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def check_model(result: CheckResult) -> CheckModel:
    return CheckModel(
        name=result.name,
        success=result.success,
        detail=result.error,
        output=_jsonable(result.output),
    )


def twist_model(tw: TwistSpec, period: PeriodGroup) -> TwistModel:
    return TwistModel(
        mode=tw.kind.value,
        weight=None if tw.weight is None else str(tw.weight),
        period_rank=period.rank,
        period_generators=list(period.generators),
    )


def gamma_model(g: GammaMap) -> GammaBlockModel:
    block = rank_nullity(g.twist_block)
    return GammaBlockModel(
        degree=g.degree,
        size=g.matrix.rows,
        rank=g.rank,
        matrix=matrix_strings(g.matrix),
        twist_block=matrix_strings(g.twist_block),
        twist_block_rank=block.rank,
        twist_block_nullity=block.nullity,
    )


def cohomology_report(
    mt: MappingTorus,
    report: CohomologyReport,
    vanishing: CheckResult,
    oracle: Optional[CheckResult] = None,
) -> CohomologyReportModel:
    return CohomologyReportModel(
        dims=list(report.dims),
        nullities=list(report.nullities),
        euler=report.euler,
        twist=twist_model(report.twist, report.period),
        field=report.field,
        alpha_approx=report.alpha_approx,
        warnings=list(report.warnings),
        n=report.n,
        monodromy=integer_rows(mt.monodromy),
        charpoly=str(mt.charpoly),
        modulus=None if mt.modulus is None else str(mt.modulus),
        orientable=report.orientable,
        method=report.method,
        vanishing=check_model(vanishing),
        gamma=[gamma_model(g) for g in report.gamma] if report.gamma else None,
        oracle=None if oracle is None else check_model(oracle),
    )


def novikov_report(
    mt: MappingTorus, inv: NovikovInvariants, consistency: CheckResult
) -> NovikovReportModel:
    return NovikovReportModel(
        betti=list(inv.betti),
        torsion=[[str(d) for d in divisors] for divisors in inv.torsion],
        wang_determinants=[str(d) for d in inv.wang_determinants],
        period_generator=inv.period_generator,
        coefficients=inv.coefficients,
        interpretation=inv.interpretation,
        n=mt.n,
        monodromy=integer_rows(mt.monodromy),
        consistency=check_model(consistency),
        warnings=list(mt.warnings),
    )


def oracle_report(
    mt: MappingTorus,
    check: CheckResult,
    cochain_dims: list[int],
    report: CohomologyReport,
) -> OracleReportModel:
    return OracleReportModel(
        success=check.success,
        cellular=list(check.output["cellular"]),
        mayer_vietoris=list(check.output["mayer_vietoris"]),
        cochain_dims=cochain_dims,
        twist=twist_model(report.twist, report.period),
        field=report.field,
        n=mt.n,
        monodromy=integer_rows(mt.monodromy),
        detail=check.error,
        warnings=list(report.warnings),
    )


def lcs_report(tricerri: CheckResult, generators: CheckResult) -> LcsReportModel:
    return LcsReportModel(
        success=tricerri.success and generators.success,
        normalization=str(tricerri.metadata.get("normalization", "")),
        identities=[check_model(c) for c in tricerri.output],
        generators=[check_model(c) for c in generators.output],
    )
