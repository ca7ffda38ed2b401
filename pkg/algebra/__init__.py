"""Exact algebra: the scalar tower, matrices, elimination, Smith forms and exterior powers."""

from algebra.domains import QQ, Domain, LaurentRing, PolynomialRing, RationalFunctionField
from algebra.exterior import exterior_power, to_cyclic_basis
from algebra.factor import poly_factor
from algebra.laurent import LaurentPoly, laurent_normalize
from algebra.linalg import det, kernel_basis, rank_bareiss, rank_nullity
from algebra.matrix import Matrix
from algebra.number_field import NumberField, NumberFieldElement, nf_inverse
from algebra.polynomial import Poly
from algebra.rational_function import RationalFunction
from algebra.roots import RealRootLabel, isolate_real_roots
from algebra.smith import SmithForm, smith_normal_form

__all__ = [
    "QQ",
    "Domain",
    "LaurentPoly",
    "LaurentRing",
    "Matrix",
    "NumberField",
    "NumberFieldElement",
    "Poly",
    "PolynomialRing",
    "RationalFunction",
    "RationalFunctionField",
    "RealRootLabel",
    "SmithForm",
    "det",
    "exterior_power",
    "isolate_real_roots",
    "kernel_basis",
    "laurent_normalize",
    "nf_inverse",
    "poly_factor",
    "rank_bareiss",
    "rank_nullity",
    "smith_normal_form",
    "to_cyclic_basis",
]
