"""Factorization of rational polynomials.

Squarefree decomposition (Yun) supplies multiplicities, the rational-root
test strips linear factors, and Kronecker's method splits what remains.
Kronecker's search enumerates divisor combinations of the values at d+1
integer points for every candidate degree d, so its cost grows exponentially
with the degree; it is meant for the small moduli arising from
characteristic polynomials of low-dimensional monodromies.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from algebra.errors import FactorizationTooLarge, ZeroPolynomial
from algebra.polynomial import Poly, interpolate

logger = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 8

# Integer abscissae tried by Kronecker's search, nearest to zero first.
_KRONECKER_POINTS = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8]


def _positive_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree a_i with p ~ prod a_i^i."""
    if p.is_zero:
        raise ZeroPolynomial("Cannot decompose the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a0 = Poly.gcd(f, df)
    b = f.exquo(a0)
    c = df.exquo(a0)
    d = c - b.derivative()
    result: list[tuple[Poly, int]] = []
    i = 1
    while b.degree > 0:
        a = Poly.gcd(b, d)
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        if a.degree > 0:
            result.append((a, i))
        i += 1
    return result


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of p, ascending."""
    if p.is_zero:
        raise ZeroPolynomial("The zero polynomial has every rational as a root")
    g = p.primitive()
    roots: set[Fraction] = set()
    coeffs = g.integer_coeffs()
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
    trimmed = coeffs[low:]
    if len(trimmed) == 1:
        return sorted(roots)
    for num in _positive_divisors(trimmed[0]):
        for den in _positive_divisors(trimmed[-1]):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if g(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _kronecker_split(f: Poly, max_degree: int) -> list[Poly]:
    """Split a primitive squarefree integer polynomial without rational roots."""
    if f.degree <= 3:
        return [f]
    if f.degree > max_degree:
        logger.warning(f"Refusing Kronecker search on degree {f.degree} > {max_degree}")
        raise FactorizationTooLarge(
            f"Kronecker search refused for degree {f.degree} (limit {max_degree})"
        )
    values = {a: f(Fraction(a)) for a in _KRONECKER_POINTS}
    for d in range(2, f.degree // 2 + 1):
        # Points with the fewest divisors keep the combination count down.
        points = sorted(_KRONECKER_POINTS, key=lambda a: len(_positive_divisors(int(values[a]))))
        points = points[: d + 1]
        choices = []
        for i, a in enumerate(points):
            divs = _positive_divisors(int(values[a]))
            choices.append(divs if i == 0 else divs + [-v for v in divs])
        for combo in itertools.product(*choices):
            g = interpolate(points, combo)
            if g.degree != d:
                continue
            if any(c.denominator != 1 for c in g.coeffs):
                continue
            q, r = divmod(f, g)
            if r.is_zero:
                logger.debug(f"Kronecker split {f} = ({g})({q})")
                return _kronecker_split(g.primitive(), max_degree) + _kronecker_split(
                    q.primitive(), max_degree
                )
    return [f]


def poly_factor(p: Poly, max_degree: int = DEFAULT_MAX_DEGREE) -> list[tuple[Poly, int]]:
    """Factor p into monic irreducibles over the rationals.

    Args:
        p: Nonzero polynomial.
        max_degree: Largest squarefree part handed to Kronecker's search.

    Returns:
        (irreducible monic factor, multiplicity) pairs sorted by degree and then
        coefficients; their product equals p up to the constant p.leading.
    """
    if p.is_zero:
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    factors: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(p):
        rest = part
        for root in rational_roots(part):
            linear = Poly((-root, 1))
            factors.append((linear, mult))
            rest = rest.exquo(linear)
        if rest.degree > 0:
            for piece in _kronecker_split(rest.primitive(), max_degree):
                factors.append((piece.monic(), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return factors


def is_irreducible(p: Poly, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    if p.degree <= 0:
        return False
    factors = poly_factor(p, max_degree)
    return len(factors) == 1 and factors[0][1] == 1
