"""Twisted cohomology and Novikov invariants of torus mapping tori, and the Tricerri form battery."""

from cohomology.cell_oracle import build_mapping_torus_complex, complex_cohomology, cross_check
from cohomology.checks import CheckResult
from cohomology.lcs_forms import DifferentialForm, verify_generators, verify_tricerri
from cohomology.mapping_torus import MappingTorus, TwistSpec, build, induced_maps
from cohomology.mv_engine import (
    CohomologyReport,
    gamma_matrix,
    twisted_cohomology,
    vanishing_check,
)
from cohomology.novikov import NovikovInvariants, novikov_invariants, pajitnov_consistency

__all__ = [
    "CheckResult",
    "CohomologyReport",
    "DifferentialForm",
    "MappingTorus",
    "NovikovInvariants",
    "TwistSpec",
    "build",
    "build_mapping_torus_complex",
    "complex_cohomology",
    "cross_check",
    "gamma_matrix",
    "induced_maps",
    "novikov_invariants",
    "pajitnov_consistency",
    "twisted_cohomology",
    "vanishing_check",
    "verify_generators",
    "verify_tricerri",
]
