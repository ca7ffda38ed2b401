"""Twisted cellular cochains of the mapping torus, used as an independent oracle.

The product cell structure gives D^k = C^k(T^n) + C^{k-1}(T^n): cells of the
fiber, and fiber cells times the base interval. The minimal CW structure of
T^n has zero differentials, so only the gluing along the monodromy survives:
d(a, b) = (0, (-1)^k (lambda M_k - I) a).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from algebra.domains import Domain
from algebra.linalg import rank_bareiss
from algebra.matrix import Matrix
from cohomology.checks import CheckResult
from cohomology.errors import NotAComplex
from cohomology.mapping_torus import MappingTorus, TwistSpec, induced_maps
from cohomology.mv_engine import coefficient_field, twisted_cohomology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistedComplex:
    """Cochain dimensions D^0..D^N and coboundaries d^k: D^k -> D^{k+1}."""

    dims: tuple[int, ...]
    coboundaries: tuple[Matrix, ...]
    domain: Domain

    def is_complex(self) -> bool:
        return all(
            (self.coboundaries[k + 1] @ self.coboundaries[k]).is_zero
            for k in range(len(self.coboundaries) - 1)
        )


def build_mapping_torus_complex(mt: MappingTorus, tw: TwistSpec) -> TwistedComplex:
    field = coefficient_field(mt, tw)
    dom = field.domain
    n = mt.n
    maps = induced_maps(mt)
    dims = tuple(comb(n, k) + comb(n, k - 1) if k > 0 else 1 for k in range(n + 2))
    coboundaries = []
    for k in range(n + 1):
        fiber_k, fiber_prev = comb(n, k), comb(n, k - 1) if k > 0 else 0
        # (lambda M_k - I) a lands in the C^k(T^n) slot of D^{k+1}, after C^{k+1}(T^n).
        connecting = maps[k].convert(dom).scale(field.weight) - Matrix.identity(fiber_k, dom)
        if k % 2:
            connecting = -connecting
        offset = comb(n, k + 1)
        rows = [[dom.zero] * dims[k] for _ in range(dims[k + 1])]
        for i in range(fiber_k):
            for j in range(fiber_k):
                rows[offset + i][j] = connecting[i, j]
        coboundaries.append(Matrix(dims[k + 1], dims[k], (e for r in rows for e in r), dom))
        logger.debug(f"d^{k}: {dims[k]} -> {dims[k + 1]}, fiber blocks {fiber_k}, {fiber_prev}")
    return TwistedComplex(dims, tuple(coboundaries), dom)


def complex_cohomology(c: TwistedComplex) -> list[int]:
    """dim ker d^k - rank d^{k-1}, with fraction-free ranks."""
    if not c.is_complex():
        raise NotAComplex("Consecutive coboundaries do not compose to zero")
    ranks = [rank_bareiss(d) for d in c.coboundaries]
    padded = [0, *ranks, 0]
    return [c.dims[k] - padded[k + 1] - padded[k] for k in range(len(c.dims))]


def cross_check(mt: MappingTorus, tw: TwistSpec) -> CheckResult:
    """Cellular cohomology agrees with the Mayer-Vietoris dimensions."""
    cellular = complex_cohomology(build_mapping_torus_complex(mt, tw))
    closed_form = list(twisted_cohomology(mt, tw).dims)
    ok = cellular == closed_form
    return CheckResult(
        name="cellular-oracle",
        success=ok,
        output={"cellular": cellular, "mayer_vietoris": closed_form},
        error=None if ok else f"cellular {cellular} != Mayer-Vietoris {closed_form}",
        metadata={"twist": str(tw)},
    )
