"""Real-root isolation with Sturm sequences."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from algebra.errors import NotSquarefree, ZeroPolynomial
from algebra.polynomial import Poly


def sturm_sequence(p: Poly) -> list[Poly]:
    """p, p', -rem(p, p'), ... down to the last nonzero remainder."""
    if p.is_zero:
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while not seq[-1].is_zero:
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _round_half_away(value: Fraction) -> int:
    magnitude = math.floor(abs(value) + Fraction(1, 2))
    return -magnitude if value < 0 else magnitude


def sign_variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _signs_at(seq: list[Poly], x: Optional[Fraction], direction: int) -> list[int]:
    if x is not None:
        return [_sign(q(x)) for q in seq]
    # At +inf (direction=1) or -inf (direction=-1) only leading terms matter.
    return [_sign(q.leading) * (direction ** q.degree) for q in seq]


def count_real_roots(
    p: Poly,
    low: Optional[Fraction] = None,
    high: Optional[Fraction] = None,
    seq: Optional[list[Poly]] = None,
) -> int:
    """Number of distinct real roots in (low, high]; None stands for -inf / +inf."""
    seq = seq if seq is not None else sturm_sequence(p)
    v_low = sign_variations(_signs_at(seq, low, -1))
    v_high = sign_variations(_signs_at(seq, high, 1))
    return v_low - v_high


def cauchy_bound(p: Poly) -> Fraction:
    """Every real root lies strictly inside (-B, B)."""
    lc = abs(p.leading)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RealRootLabel:
    """Exactly one root of ``modulus`` lies in the open interval (low, high).

    The endpoints are never roots; since the modulus is squarefree it changes
    sign across the interval, which is what refinement bisects on.
    """

    low: Fraction
    high: Fraction
    modulus: Poly

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def _bisect(self) -> RealRootLabel:
        mid = self.midpoint
        value = self.modulus(mid)
        if value == 0:
            quarter = self.width / 4
            return RealRootLabel(mid - quarter, mid + quarter, self.modulus)
        if _sign(self.modulus(self.low)) != _sign(value):
            return RealRootLabel(self.low, mid, self.modulus)
        return RealRootLabel(mid, self.high, self.modulus)

    def refine(self, width: Fraction) -> RealRootLabel:
        """Bisect until the interval is narrower than ``width``."""
        label = self
        while label.width >= width:
            label = label._bisect()
        return label

    def compare(self, c: Fraction) -> int:
        """Sign of (root - c)."""
        if self.modulus(c) == 0 and self.low < c < self.high:
            return 0
        label = self
        while label.low < c < label.high:
            label = label._bisect()
        return 1 if label.low >= c else -1

    def approximate(self, digits: int) -> str:
        """Decimal string of the root rounded half away from zero to ``digits`` places.

        Refines until both endpoints round to the same decimal.
        """
        scale = 10**digits
        label = self.refine(Fraction(1, 10 * scale))
        while True:
            scaled = _round_half_away(label.low * scale)
            upper = _round_half_away(label.high * scale)
            if scaled == upper:
                break
            # A rounding boundary lies in the interval; it may be the root itself.
            boundary = Fraction(2 * upper - 1, 2 * scale)
            if self.modulus(boundary) == 0:
                scaled = _round_half_away(boundary * scale)
                break
            label = label._bisect()
        negative = scaled < 0
        scaled = abs(scaled)
        whole, frac = divmod(scaled, scale)
        text = f"{whole}.{frac:0{digits}d}" if digits > 0 else str(whole)
        return f"-{text}" if negative else text

    def __str__(self) -> str:
        return f"root of {self.modulus} in ({self.low}, {self.high})"


def compare_roots(a: RealRootLabel, b: RealRootLabel) -> int:
    """Order labels of two roots; the roots must be distinct unless the labels are equal."""
    if a == b:
        return 0
    while a.low < b.high and b.low < a.high:
        if a.width >= b.width:
            a = a._bisect()
        else:
            b = b._bisect()
    return -1 if a.high <= b.low else 1


root_sort_key = functools.cmp_to_key(compare_roots)


def isolate_real_roots(p: Poly) -> list[RealRootLabel]:
    """Disjoint isolating intervals for the real roots of a squarefree p, ascending."""
    if p.is_zero:
        raise ZeroPolynomial("The zero polynomial has no isolated roots")
    if not p.is_squarefree():
        raise NotSquarefree(f"{p} has a repeated factor")
    if p.degree <= 0:
        return []
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    total = count_real_roots(p, None, None, seq)
    labels: list[RealRootLabel] = []
    stack = [(-bound, bound, total)]
    while stack:
        low, high, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            labels.append(RealRootLabel(low, high, p))
            continue
        mid = (low + high) / 2
        step = (high - low) / 8
        while p(mid) == 0:
            mid += step
            step /= 2
        left = count_real_roots(p, low, mid, seq)
        stack.append((low, mid, left))
        stack.append((mid, high, count - left))
    labels.sort(key=lambda label: label.low)
    return labels
