"""
Weil polynomials: 2-rank, validity and the genus-3 region.

A monic integer P of degree 2g is a Weil polynomial when every root has
absolute value sqrt(q). Writing P(x) = x^g h(x + q/x), that holds exactly
when the real polynomial h has all roots real and inside [-2 sqrt(q), 2 sqrt(q)].
The test is exact: h comes from integer power sums and its roots are
counted with sympy (squarefree part, then Sturm root counting). The
irrational endpoints are avoided by squaring: h(x) h(-x) is a polynomial in
x^2 whose roots, read in y = x^2, are the squares of the roots of h, so the
second count runs over [0, 4q].
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional, Sequence, Tuple

import sympy

from ..core.models import ResiduePattern, WeilPoly
from .zeta import elementary_from_power_sums, power_sums, weil_elementary


def two_rank(w: WeilPoly) -> int:
    """Largest i with a_i odd, 0 if none (the 2-rank of the Jacobian)."""
    r = 0
    for i, a in enumerate(w.a, start=1):
        if a % 2:
            r = i
    return r


def is_ordinary(w: WeilPoly) -> bool:
    return bool(w.a) and w.a[-1] % 2 == 1


def residue_pattern(w: WeilPoly) -> ResiduePattern:
    return ResiduePattern(tuple(a % 2 for a in w.a))


def expand_coeffs(w: WeilPoly) -> List[int]:
    """All 2g+1 coefficients, leading first: 1, a_1..a_g, a_(g-1) q, ..., q^g."""
    g, q = w.genus, w.q
    a = [1] + list(w.a)
    return a + [a[g - j] * q ** j for j in range(1, g + 1)]


# ---------------------------------------------------------------------------
# real Weil polynomial
# ---------------------------------------------------------------------------

def real_weil_poly(w: WeilPoly) -> List[int]:
    """
    Coefficients [1, b_1, ..., b_g] of h, leading first.

    With beta = alpha + q/alpha, summing (alpha + q/alpha)^k over all 2g roots
    counts every beta twice, and alpha^-m sums to q^-m p_m.
    """
    g, q = w.genus, w.q
    p = power_sums(weil_elementary(w), g)

    def s(m: int) -> Fraction:
        if m == 0:
            return Fraction(2 * g)
        if m > 0:
            return Fraction(p[m - 1])
        return Fraction(p[-m - 1], q ** (-m))

    P = []
    for k in range(1, g + 1):
        twice = sum(comb(k, i) * q ** (k - i) * s(2 * i - k) for i in range(k + 1))
        P.append(twice / 2)
    if any(x.denominator != 1 for x in P):
        raise ValueError(f"non-integral real power sums for {w}")
    e = elementary_from_power_sums([int(x) for x in P], g)
    return [(-1) ** i * e[i] for i in range(g + 1)]


def weil_from_real(h: Sequence[int], q: int) -> WeilPoly:
    """Inverse of real_weil_poly: expand x^g h(x + q/x)."""
    g = len(h) - 1
    a = []
    for i in range(1, g + 1):
        a.append(sum(h[m] * comb(g - m, (i - m) // 2) * q ** ((i - m) // 2)
                     for m in range(i % 2, i + 1, 2)))
    return WeilPoly(q, tuple(a))


# ---------------------------------------------------------------------------
# exact real-root location
# ---------------------------------------------------------------------------

_X = sympy.Symbol("x")


def count_real_roots(coeffs: Sequence[int], lo: Optional[int] = None,
                     hi: Optional[int] = None) -> int:
    """Distinct real roots in [lo, hi] of the integer polynomial given leading first."""
    f = sympy.Poly(list(coeffs), _X, domain=sympy.ZZ)
    if f.degree() <= 0:
        return 0
    return f.sqf_part().count_roots(lo, hi)


def _root_squares(h: Sequence[int]) -> sympy.Poly:
    """Polynomial whose roots are the squares of the roots of h, from h(x) h(-x)."""
    g = len(h) - 1
    f = sympy.Poly(list(h), _X, domain=sympy.ZZ)
    mirrored = sympy.Poly([c * (-1) ** (g - i) for i, c in enumerate(h)], _X, domain=sympy.ZZ)
    return sympy.Poly((f * mirrored).all_coeffs()[::2], _X, domain=sympy.ZZ)


@lru_cache(maxsize=1 << 16)
def _roots_in_interval(h: Tuple[int, ...], q: int) -> bool:
    f = sympy.Poly(list(h), _X, domain=sympy.ZZ).sqf_part()
    if f.count_roots() != f.degree():
        return False
    H = _root_squares(h).sqf_part()
    return H.count_roots(0, 4 * q) == H.degree()


def real_roots_in_interval(h: Sequence[int], q: int) -> bool:
    """All roots of h (leading first) real and inside [-2 sqrt(q), 2 sqrt(q)]."""
    if len(h) <= 1:
        return True
    return _roots_in_interval(tuple(int(c) for c in h), q)


def _coefficient_bounds_hold(w: WeilPoly) -> bool:
    # |a_i| <= C(2g, i) q^(i/2), squared to stay in integers
    g, q = w.genus, w.q
    return all(a * a <= comb(2 * g, i) ** 2 * q ** i for i, a in enumerate(w.a, start=1))


def _real_bounds_hold(h: Sequence[int], q: int) -> bool:
    # |b_i| <= C(g, i) (2 sqrt q)^i, and Newton's inequality on b_1, b_2
    g = len(h) - 1
    if any(b * b > comb(g, i) ** 2 * (4 * q) ** i for i, b in enumerate(h)):
        return False
    return g < 2 or (g - 1) * h[1] ** 2 >= 2 * g * h[2]


def is_weil_poly(w: WeilPoly) -> bool:
    if not _coefficient_bounds_hold(w):
        return False
    h = real_weil_poly(w)
    return _real_bounds_hold(h, w.q) and real_roots_in_interval(h, w.q)


# ---------------------------------------------------------------------------
# genus-3 closed region
# ---------------------------------------------------------------------------

def in_w3_region(s: int, t: int, u: int, q: int) -> bool:
    """Exact membership of (s, t, u) in the genus-3 Weil region."""
    if s * s > 36 * q:
        return False
    if t + 9 * q < 0 or 16 * q * s * s > (t + 9 * q) ** 2:
        return False
    if 3 * t > s * s + 9 * q:
        return False
    D = s * s - 3 * t + 9 * q
    if (27 * u + 2 * s ** 3 - 9 * s * t - 27 * q * s) ** 2 > 4 * D ** 3:
        return False
    if t + q < 0 or (u + 2 * q * s) ** 2 > 4 * q * (t + q) ** 2:
        return False
    return True
