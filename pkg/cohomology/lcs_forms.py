"""Exact differential forms on the Inoue-surface chart and the Tricerri identities.

Coordinates are (x, y, w1, w2) with w2 > 0. Coefficients are Laurent
polynomials in u = w2^(1/2), so the orthonormal coframe of the Tricerri
metric g = (dw1^2 + dw2^2)/w2^2 + w2 (dx^2 + dy^2),

    e1 = dw1/w2,  e2 = dw2/w2,  e3 = u dx,  e4 = u dy,

has coefficients in the same ring. The orientation is e1^e2^e3^e4.

The Kahler form is fixed by omega(X, Y) = g(JX, Y) with J d/dx = d/dy and
J d/dw1 = d/dw2, giving omega = e1^e2 + e3^e4. The printed forms
-2 dw1^dw2/w2^2 and -2 w2 dx^dy carry the extra constant -2, recorded as
``TricerriData.normalization`` (the factor taking printed forms to normalized ones).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from algebra.laurent import LaurentPoly
from cohomology.checks import CheckResult, combine
from cohomology.errors import DegreeOverflow, ThetaNotClosed

logger = logging.getLogger(__name__)

DIM = 4
COORDINATES = ("x", "y", "w1", "w2")
W2 = 3

Coefficient = Union[LaurentPoly, int, Fraction]


def _sort_sign(indices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``indices``; 0 if an index repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


class DifferentialForm:
    """A k-form sum f_I dx_I with I increasing; zero coefficients are dropped.

    Degrees -1 and DIM + 1 are admitted for the zero forms that operators
    produce at the ends of the complex.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Optional[Mapping[tuple[int, ...], Coefficient]] = None):
        if not -1 <= degree <= DIM + 1:
            raise DegreeOverflow(f"No {degree}-forms on a {DIM}-manifold")
        cleaned: dict[tuple[int, ...], LaurentPoly] = {}
        for index, coeff in (terms or {}).items():
            if len(index) != degree:
                raise ValueError(f"Index {index} does not match degree {degree}")
            sign, key = _sort_sign(index)
            c = LaurentPoly.coerce(coeff) * sign
            if not c:
                continue
            total = cleaned.get(key, LaurentPoly()) + c
            if total:
                cleaned[key] = total
            else:
                cleaned.pop(key, None)
        self.degree = degree
        self._terms: dict[tuple[int, ...], LaurentPoly] = dict(sorted(cleaned.items()))

    @classmethod
    def zero(cls, degree: int) -> DifferentialForm:
        return cls(degree)

    @classmethod
    def function(cls, f: Coefficient) -> DifferentialForm:
        return cls(0, {(): f})

    @classmethod
    def basis(cls, *indices: int, coeff: Coefficient = 1) -> DifferentialForm:
        return cls(len(indices), {tuple(indices): coeff})

    @property
    def terms(self) -> dict[tuple[int, ...], LaurentPoly]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, index: tuple[int, ...]) -> LaurentPoly:
        return self._terms.get(index, LaurentPoly())

    def _check_degree(self, other: DifferentialForm) -> None:
        if self.degree != other.degree:
            raise ValueError(f"Cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other: DifferentialForm) -> DifferentialForm:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        self._check_degree(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, LaurentPoly()) + v
        return DifferentialForm(self.degree, terms)

    def __neg__(self) -> DifferentialForm:
        return DifferentialForm(self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: DifferentialForm) -> DifferentialForm:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c: Coefficient) -> DifferentialForm:
        """Multiply by a function of u."""
        if isinstance(c, DifferentialForm):
            return NotImplemented
        c = LaurentPoly.coerce(c)
        return DifferentialForm(self.degree, {k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, c in self._terms.items():
            coeff = c.format("u")
            if len(c.coeffs) > 1:
                coeff = f"({coeff})"
            if not index:
                parts.append(coeff)
                continue
            basis = "^".join(f"d{COORDINATES[i]}" for i in index)
            if coeff == "1":
                parts.append(basis)
            elif coeff == "-1":
                parts.append(f"-{basis}")
            else:
                parts.append(f"{coeff} {basis}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"DifferentialForm({self.degree}, {self})"


def wedge(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    if a.degree + b.degree > DIM:
        raise DegreeOverflow(f"{a.degree}-form ^ {b.degree}-form exceeds degree {DIM}")
    terms: dict[tuple[int, ...], LaurentPoly] = {}
    for i, f in a.terms.items():
        for j, g in b.terms.items():
            sign, key = _sort_sign(i + j)
            if sign:
                terms[key] = terms.get(key, LaurentPoly()) + f * g * sign
    return DifferentialForm(a.degree + b.degree, terms)


def d_w2(f: LaurentPoly) -> LaurentPoly:
    """df/dw2 = (1/2) u^-1 df/du."""
    return f.derivative() * LaurentPoly.monomial(Fraction(1, 2), -1)


def exterior_d(a: DifferentialForm) -> DifferentialForm:
    """Coefficients depend on w2 alone, so d(f dx_I) = df/dw2 dw2 ^ dx_I."""
    if a.degree >= DIM or a.degree < 0:
        return DifferentialForm.zero(a.degree + 1)
    terms: dict[tuple[int, ...], LaurentPoly] = {}
    for index, f in a.terms.items():
        if W2 in index:
            continue
        terms[(W2, *index)] = d_w2(f)
    return DifferentialForm(a.degree + 1, terms)


def _require_closed(theta: DifferentialForm) -> None:
    if theta.degree != 1 or not exterior_d(theta).is_zero:
        raise ThetaNotClosed(f"theta = {theta} is not a closed one-form")


def d_theta(a: DifferentialForm, theta: DifferentialForm) -> DifferentialForm:
    """d_theta a = da - theta ^ a."""
    _require_closed(theta)
    if a.degree >= DIM or a.degree < 0:
        return DifferentialForm.zero(a.degree + 1)
    return exterior_d(a) - wedge(theta, a)


# Coordinate index -> (frame index, factor) with dx_c = factor * e_frame.
_TO_FRAME = {
    0: (2, LaurentPoly.monomial(1, -1)),
    1: (3, LaurentPoly.monomial(1, -1)),
    2: (0, LaurentPoly.monomial(1, 2)),
    3: (1, LaurentPoly.monomial(1, 2)),
}
# Frame index -> (coordinate index, factor) with e_j = factor * dx_coord.
_FROM_FRAME = {
    0: (2, LaurentPoly.monomial(1, -2)),
    1: (3, LaurentPoly.monomial(1, -2)),
    2: (0, LaurentPoly.monomial(1, 1)),
    3: (1, LaurentPoly.monomial(1, 1)),
}


def _relabel(
    a: DifferentialForm, table: Mapping[int, tuple[int, LaurentPoly]]
) -> DifferentialForm:
    terms: dict[tuple[int, ...], LaurentPoly] = {}
    for index, f in a.terms.items():
        coeff = f
        new_index = []
        for i in index:
            target, factor = table[i]
            new_index.append(target)
            coeff = coeff * factor
        sign, key = _sort_sign(new_index)
        terms[key] = terms.get(key, LaurentPoly()) + coeff * sign
    return DifferentialForm(a.degree, terms)


def to_frame(a: DifferentialForm) -> DifferentialForm:
    """Components in the orthonormal coframe; index j stands for e_{j+1}."""
    return _relabel(a, _TO_FRAME)


def from_frame(a: DifferentialForm) -> DifferentialForm:
    return _relabel(a, _FROM_FRAME)


def frame_form(*indices: int, coeff: Coefficient = 1) -> DifferentialForm:
    """coeff * e_{i1} ^ ... written in coordinates (0-based frame indices)."""
    return from_frame(DifferentialForm.basis(*indices, coeff=coeff))


def hodge_star(a: DifferentialForm) -> DifferentialForm:
    """*e_J = sign(J, J^c) e_{J^c} in the oriented orthonormal coframe."""
    if a.degree < 0 or a.degree > DIM:
        return DifferentialForm.zero(DIM - a.degree)
    framed = to_frame(a)
    terms = {}
    for index, f in framed.terms.items():
        complement = tuple(j for j in range(DIM) if j not in index)
        sign, _ = _sort_sign(index + complement)
        terms[complement] = f * sign
    return from_frame(DifferentialForm(DIM - a.degree, terms))


def inner_product(a: DifferentialForm, b: DifferentialForm) -> LaurentPoly:
    """g(a, b), read off from a ^ *b = g(a, b) dvol."""
    if a.degree != b.degree:
        raise ValueError("Inner product of forms of different degrees")
    return to_frame(wedge(a, hodge_star(b)))[tuple(range(DIM))]


@dataclass(frozen=True)
class MetricFrame:
    """Oriented orthonormal coframe (e1, e2, e3, e4) in coordinates."""

    coframe: tuple[DifferentialForm, ...]

    @property
    def volume(self) -> DifferentialForm:
        vol = self.coframe[0]
        for e in self.coframe[1:]:
            vol = wedge(vol, e)
        return vol

    def gram(self) -> list[list[LaurentPoly]]:
        return [[inner_product(a, b) for b in self.coframe] for a in self.coframe]


def metric_frame() -> MetricFrame:
    return MetricFrame(tuple(frame_form(j) for j in range(DIM)))


def delta_theta(a: DifferentialForm, theta: DifferentialForm) -> DifferentialForm:
    """delta_theta = -* d_{-theta} *."""
    return -hodge_star(d_theta(hodge_star(a), -theta))


def laplacian_theta(a: DifferentialForm, theta: DifferentialForm) -> DifferentialForm:
    """delta_theta d_theta + d_theta delta_theta."""
    return delta_theta(d_theta(a, theta), theta) + d_theta(delta_theta(a, theta), theta)


def dx(i: int) -> DifferentialForm:
    return DifferentialForm.basis(i)


@dataclass(frozen=True)
class TricerriData:
    theta: DifferentialForm
    eta: DifferentialForm
    omega1: DifferentialForm
    omega2: DifferentialForm
    omega: DifferentialForm
    dvol: DifferentialForm
    printed_eta: DifferentialForm
    printed_omega1: DifferentialForm
    printed_omega2: DifferentialForm
    normalization: Fraction


def tricerri_data() -> TricerriData:
    inv_w2 = LaurentPoly.monomial(1, -2)
    c = Fraction(-1, 2)
    theta = dx(W2) * inv_w2
    printed_eta = dx(2) * (-inv_w2)
    printed_omega1 = DifferentialForm.basis(2, 3, coeff=LaurentPoly.monomial(-2, -4))
    printed_omega2 = DifferentialForm.basis(0, 1, coeff=LaurentPoly.monomial(-2, 2))
    omega1 = printed_omega1 * c
    omega2 = printed_omega2 * c
    return TricerriData(
        theta=theta,
        eta=printed_eta * c,
        omega1=omega1,
        omega2=omega2,
        omega=omega1 + omega2,
        dvol=hodge_star(DifferentialForm.function(1)),
        printed_eta=printed_eta,
        printed_omega1=printed_omega1,
        printed_omega2=printed_omega2,
        normalization=c,
    )


def _vanishes(name: str, residual: DifferentialForm) -> CheckResult:
    ok = residual.is_zero
    return CheckResult(
        name=name,
        success=ok,
        output=str(residual),
        error=None if ok else f"residual {residual}",
    )


def _nonzero(name: str, form: DifferentialForm) -> CheckResult:
    ok = not form.is_zero
    return CheckResult(
        name=name,
        success=ok,
        output=str(form),
        error=None if ok else "form vanishes identically",
    )


def verify_tricerri(
    theta: Optional[DifferentialForm] = None,
    omega: Optional[DifferentialForm] = None,
) -> CheckResult:
    """Run the LCS/LCK identity battery; ``theta`` and ``omega`` override the defaults."""
    data = tricerri_data()
    th = theta if theta is not None else data.theta
    om = omega if omega is not None else data.omega
    checks = [
        _vanishes("d omega = theta ^ omega", exterior_d(om) - wedge(th, om)),
        _vanishes("d theta = 0", exterior_d(th)),
        _nonzero("omega ^ omega != 0", wedge(om, om)),
    ]
    try:
        checks += [
            _vanishes("omega1 = d_theta eta", data.omega1 - d_theta(data.eta, th)),
            _vanishes("theta ^ omega1 = 0", wedge(th, data.omega1)),
            _vanishes("d omega1 = 0", exterior_d(data.omega1)),
            _vanishes("d_theta omega2 = 0", d_theta(data.omega2, th)),
            _vanishes("delta_theta omega2 = 0", delta_theta(data.omega2, th)),
            _vanishes(
                "Laplacian_theta(theta ^ omega) = 0", laplacian_theta(wedge(th, om), th)
            ),
        ]
    except ThetaNotClosed as e:
        checks.append(CheckResult(name="twisted operators", success=False, error=str(e)))
    checks += [
        _vanishes("dvol = omega ^ omega / 2", data.dvol - wedge(om, om) * Fraction(1, 2)),
        _vanishes("*omega2 = omega1", hodge_star(data.omega2) - data.omega1),
    ]
    result = combine("tricerri", checks)
    result.metadata["normalization"] = str(data.normalization)
    logger.debug(f"Tricerri battery: {result.metadata}")
    return result


def verify_generators() -> CheckResult:
    """omega spans H^2_theta and theta ^ omega is closed and co-closed."""
    data = tricerri_data()
    th, om = data.theta, data.omega
    tw = wedge(th, om)
    checks = [
        _vanishes("d_theta omega = 0", d_theta(om, th)),
        _vanishes("omega - omega2 = d_theta eta", om - data.omega2 - d_theta(data.eta, th)),
        _vanishes("Laplacian_theta omega2 = 0", laplacian_theta(data.omega2, th)),
        _vanishes("d_theta(theta ^ omega) = 0", d_theta(tw, th)),
        _vanishes("delta_theta(theta ^ omega) = 0", delta_theta(tw, th)),
    ]
    return combine("generators", checks)
