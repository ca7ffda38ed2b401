"""Novikov homology of a mapping torus through the Laurent-ring Wang sequence.

For the rank-one period group s*Z the Novikov ring is a completion of
Q[t, t^-1], which is flat over it; ranks and torsion are therefore computed
over the Laurent ring and read over the Novikov ring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from algebra.domains import LaurentRing
from algebra.laurent import LaurentPoly
from algebra.linalg import det
from algebra.matrix import Matrix
from algebra.smith import SmithForm, smith_normal_form
from cohomology.checks import CheckResult
from cohomology.mapping_torus import MappingTorus, TwistSpec, induced_maps
from cohomology.mv_engine import twisted_cohomology

logger = logging.getLogger(__name__)

COEFFICIENTS_NOTE = (
    "ranks and torsion over Q[t, t^-1]; integer-coefficient torsion is not computed"
)
INTERPRETATION_NOTE = (
    "Novikov ring read through the flat inclusion of Q[t, t^-1]; period group s*Z of rank 1"
)


@dataclass(frozen=True)
class WangMatrix:
    """t * M_k - I over Q[t, t^-1]."""

    degree: int
    matrix: Matrix

    @property
    def determinant(self) -> LaurentPoly:
        return det(self.matrix)


def wang_matrix(mt: MappingTorus, k: int) -> WangMatrix:
    ring = LaurentRing()
    m = induced_maps(mt)[k].convert(ring)
    return WangMatrix(k, m.scale(LaurentPoly.t()) - Matrix.identity(m.rows, ring))


@dataclass(frozen=True)
class NovikovInvariants:
    betti: tuple[int, ...]
    torsion: tuple[tuple[LaurentPoly, ...], ...]
    wang_determinants: tuple[LaurentPoly, ...]
    period_generator: str = "s, with theta = s * dt on the base circle"
    coefficients: str = COEFFICIENTS_NOTE
    interpretation: str = INTERPRETATION_NOTE


def _torsion_divisors(snf: SmithForm) -> tuple[LaurentPoly, ...]:
    return tuple(d for d in snf.divisors if d and not d.is_unit)


def novikov_invariants(mt: MappingTorus) -> NovikovInvariants:
    """Betti numbers and torsion of H_i(M; Q[t, t^-1]), i = 0..n+1.

    H_i is coker(t M_i - I) plus ker(t M_{i-1} - I); the kernel is free, so all
    torsion comes from the Smith form of t M_i - I.
    """
    n = mt.n
    forms = [smith_normal_form(wang_matrix(mt, k).matrix) for k in range(n + 1)]
    ranks = [f.rank for f in forms]
    free = [comb(n, k) - ranks[k] for k in range(n + 1)]
    padded = [0, *free, 0]
    betti = tuple(padded[i] + padded[i + 1] for i in range(n + 2))
    torsion = tuple(_torsion_divisors(f) for f in forms) + ((),)
    determinants = tuple(wang_matrix(mt, k).determinant for k in range(n + 1))
    logger.debug(
        f"Novikov betti={betti} torsion={[[str(d) for d in ds] for ds in torsion]}"
    )
    return NovikovInvariants(betti=betti, torsion=torsion, wang_determinants=determinants)


def pajitnov_consistency(mt: MappingTorus) -> CheckResult:
    """Novikov Betti numbers agree with the cohomology for a transcendental weight."""
    betti = list(novikov_invariants(mt).betti)
    dims = list(twisted_cohomology(mt, TwistSpec.transcendental()).dims)
    ok = betti == dims
    return CheckResult(
        name="novikov-vs-transcendental",
        success=ok,
        output={"novikov_betti": betti, "transcendental_dims": dims},
        error=None if ok else f"Novikov Betti {betti} != transcendental dims {dims}",
    )
