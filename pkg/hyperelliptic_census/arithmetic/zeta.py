"""
Point counts, Weierstrass counts and the Newton identities linking them to
the Weil polynomial.

Over GF(2^m) the fibre of y^2 + v y = u above x has 1 point if v(x) = 0,
otherwise 2 or 0 points as Tr(u(x)/v(x)^2) is 0 or 1. Points at infinity are
read off the reversed chart s^2 + v*(t) s = u*(t) at t = 0.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..algebra.gf2n import (
    FieldDesc,
    extension,
    fe_embed,
    fe_inv,
    fe_mul,
    fe_trace,
    field_tables,
    trace_mask,
)
from ..algebra.polyring import p_roots_by_degree
from ..core.errors import MalformedInputError
from ..core.models import CountVector, Curve, Partition, WeilPoly

logger = logging.getLogger(__name__)


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def _affine_counts(vc: Sequence[int], uc: Sequence[int], E: FieldDesc) -> Tuple[int, int]:
    """(affine points, affine roots of v) over E, coefficients already in E."""
    mask = trace_mask(E)
    N = W = 0
    tables = field_tables(E)

    def fibre(vx: int, ux: int, inv_v2: int) -> None:
        nonlocal N, W
        if not vx:
            N += 1
            W += 1
        elif not ux or not _parity(fe_mul(ux, inv_v2, E) & mask):
            N += 2

    # x = 0
    v0 = vc[0] if vc else 0
    u0 = uc[0] if uc else 0
    fibre(v0, u0, fe_inv(fe_mul(v0, v0, E), E) if v0 else 0)

    if tables is None:
        for x in range(1, E.q):
            vx = ux = 0
            for c in reversed(vc):
                vx = fe_mul(vx, x, E) ^ c
            for c in reversed(uc):
                ux = fe_mul(ux, x, E) ^ c
            fibre(vx, ux, fe_inv(fe_mul(vx, vx, E), E) if vx else 0)
        return N, W

    exp, log = tables
    order = E.order
    vrev, urev = list(reversed(vc)), list(reversed(uc))
    for lx in range(order):
        vx = 0
        for c in vrev:
            vx = (exp[log[vx] + lx] if vx else 0) ^ c
        if not vx:
            N += 1
            W += 1
            continue
        ux = 0
        for c in urev:
            ux = (exp[log[ux] + lx] if ux else 0) ^ c
        if not ux or not _parity(exp[(log[ux] - 2 * log[vx]) % order] & mask):
            N += 2
    return N, W


def count_fibres(c: Curve, k: int) -> Tuple[int, int]:
    """(N_k, W_k) over GF(q^k)."""
    F = c.field
    g = c.genus
    E = extension(F, k)
    vc = [fe_embed(x, F, E) for x in c.v.coeffs]
    uc = [fe_embed(x, F, E) for x in c.u.coeffs]
    N, W = _affine_counts(vc, uc, E)
    v_top = fe_embed(c.v.coeff(g + 1), F, E)
    u_top = fe_embed(c.u.coeff(2 * g + 2), F, E)
    if not v_top:
        N += 1
        W += 1
    elif not fe_trace(fe_mul(u_top, fe_inv(fe_mul(v_top, v_top, E), E), E), E):
        N += 2
    return N, W


def count_points(c: Curve, k: int) -> int:
    return count_fibres(c, k)[0]


def count_weierstrass(c: Curve, k: int) -> int:
    """Distinct roots of v in GF(q^k), plus one if infinity is ramified."""
    return count_fibres(c, k)[1]


def count_vector(c: Curve, K: int) -> CountVector:
    return CountVector(c.field.q, tuple(count_points(c, k) for k in range(1, K + 1)))


def weierstrass_orbit_sizes(c: Curve) -> Partition:
    """Sizes of the Frobenius orbits on the Weierstrass points, largest first."""
    sizes = list(p_roots_by_degree(c.v))
    if c.v.degree <= c.genus:
        sizes.append(1)
    return tuple(sorted(sizes, reverse=True))


def geometric_weierstrass(c: Curve) -> int:
    return sum(weierstrass_orbit_sizes(c))


# ---------------------------------------------------------------------------
# Newton identities
# ---------------------------------------------------------------------------

def power_sums(e: Sequence[int], K: int) -> List[int]:
    """
    Power sums p_1..p_K of the roots of x^d - e_1 x^(d-1) + e_2 x^(d-2) - ...

    e[0] must be 1; entries past the end of e are zero.
    """
    p: List[int] = [0]
    for k in range(1, K + 1):
        ek = e[k] if k < len(e) else 0
        total = (-1) ** (k - 1) * k * ek
        for i in range(1, k):
            eki = e[k - i] if k - i < len(e) else 0
            if eki:
                total += (-1) ** (k - 1 - i) * eki * p[i]
        p.append(total)
    return p[1:]


def elementary_from_power_sums(p: Sequence[int], d: int) -> List[int]:
    """e_0..e_d from power sums p_1..p_d; raises if they are not integral."""
    e: List[Fraction] = [Fraction(1)]
    for k in range(1, d + 1):
        total = Fraction(0)
        for i in range(1, k + 1):
            total += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e.append(total / k)
    if any(x.denominator != 1 for x in e):
        raise MalformedInputError(f"power sums {list(p)} do not come from an integral polynomial")
    return [int(x) for x in e]


def weil_elementary(w: WeilPoly) -> List[int]:
    """e_0..e_2g of the Frobenius eigenvalues."""
    g, q = w.genus, w.q
    a = (1,) + tuple(w.a)
    e = [(-1) ** i * a[i] for i in range(g + 1)]
    for j in range(1, g + 1):
        e.append((-1) ** (g + j) * a[g - j] * q ** j)
    return e


def counts_from_weil(w: WeilPoly, K: int) -> CountVector:
    q = w.q
    p = power_sums(weil_elementary(w), K)
    return CountVector(q, tuple(q ** k + 1 - p[k - 1] for k in range(1, K + 1)))


def weil_from_counts(cv: CountVector, g: int) -> WeilPoly:
    """a_1..a_g from N_1..N_g."""
    if len(cv) < g:
        raise MalformedInputError(f"need {g} point counts, got {len(cv)}")
    q = cv.q
    p = [q ** k + 1 - cv[k] for k in range(1, g + 1)]
    e = elementary_from_power_sums(p, g)
    return WeilPoly(q, tuple((-1) ** i * e[i] for i in range(1, g + 1)))


# ---------------------------------------------------------------------------
# closed forms for small genus
# ---------------------------------------------------------------------------

def closed_form_counts_g3(s: int, t: int, u: int, q: int) -> Tuple[int, ...]:
    """N_1..N_5 of a genus-3 curve with Weil coefficients (s, t, u)."""
    return (
        q + 1 + s,
        q**2 + 1 - s**2 + 2*t,
        q**3 + 1 + s**3 - 3*s*t + 3*u,
        q**4 + 1 - s**4 + 4*s**2*t - 4*s*u - 2*t**2 + 4*q*t,
        q**5 + 1 + s**5 - 5*s**3*t + 5*s**2*u + 5*s*t**2 - 5*q*s*t - 5*t*u + 5*q**2*s,
    )


def closed_form_counts_g4(s: int, t: int, u: int, v: int, q: int) -> Tuple[int, ...]:
    """N_1..N_7 of a genus-4 curve with Weil coefficients (s, t, u, v)."""
    return (
        q + 1 + s,
        q**2 + 1 - s**2 + 2*t,
        q**3 + 1 + s**3 - 3*s*t + 3*u,
        q**4 + 1 - s**4 + 4*s**2*t - 4*s*u - 2*t**2 + 4*v,
        q**5 + 1 + s**5 - 5*s**3*t + 5*s**2*u + 5*s*t**2 - 5*s*v - 5*t*u + 5*u*q,
        q**6 + 1 - s**6 + 6*s**4*t - 6*s**3*u - 9*s**2*t**2 + 6*s**2*v + 12*s*t*u
        - 6*s*u*q + 2*t**3 - 6*t*v - 3*u**2 + 6*t*q**2,
        q**7 + 1 + s**7 - 7*s**5*t + 7*s**4*u + 14*s**3*t**2 - 7*s**3*v - 21*s**2*t*u
        + 7*s**2*u*q - 7*s*t**3 + 14*s*t*v + 7*s*u**2 - 7*s*t*q**2 + 7*t**2*u
        - 7*t*u*q - 7*u*v + 7*s*q**3,
    )
