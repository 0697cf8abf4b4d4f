"""
Dense univariate polynomials over GF(2^n).

Coefficients are stored low degree first with trailing zeros stripped, so the
zero polynomial has an empty coefficient tuple and degree ZERO_DEGREE.
A polynomial also has a packed form: the int sum(c_i << (i*n)). That packing
is the bit vector used by f2space and the canonical order used everywhere a
"smallest" polynomial is chosen.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..core.errors import FieldDomainError, MalformedInputError
from .gf2n import (
    FieldDesc,
    FieldElement,
    fe_embed,
    fe_inv,
    fe_mul,
    fe_root_m,
    field_tables,
)

ZERO_DEGREE = -1


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial over a fixed field, coefficients low degree first."""

    coeffs: Tuple[int, ...]
    field: FieldDesc

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __add__(self, other: "Poly") -> "Poly":
        return p_add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return p_mul(self, other)

    def __str__(self) -> str:
        return serialize(self)


def poly(coeffs: Sequence[int], F: FieldDesc) -> Poly:
    return Poly(tuple(coeffs), F)


def zero(F: FieldDesc) -> Poly:
    return Poly((), F)


def one(F: FieldDesc) -> Poly:
    return Poly((1,), F)


def monomial(c: FieldElement, i: int, F: FieldDesc) -> Poly:
    return Poly((0,) * i + (c,), F)


# ---------------------------------------------------------------------------
# coefficient-list kernels; these are the hot paths of the census
# ---------------------------------------------------------------------------

def mul_lists(a: Sequence[int], b: Sequence[int], F: FieldDesc) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    tables = field_tables(F)
    if tables is None:
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] ^= fe_mul(x, y, F)
        return out
    exp, log = tables
    for i, x in enumerate(a):
        if x:
            lx = log[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= exp[lx + log[y]]
    return out


def scale_list(a: Sequence[int], c: FieldElement, F: FieldDesc) -> List[int]:
    return [fe_mul(x, c, F) for x in a]


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def p_add(f: Poly, g: Poly) -> Poly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] ^= y
    return Poly(tuple(out), f.field)


def p_mul(f: Poly, g: Poly) -> Poly:
    return Poly(tuple(mul_lists(f.coeffs, g.coeffs, f.field)), f.field)


def p_scale(f: Poly, c: FieldElement) -> Poly:
    return Poly(tuple(scale_list(f.coeffs, c, f.field)), f.field)


def p_monic(f: Poly) -> Poly:
    if f.is_zero():
        raise FieldDomainError("the zero polynomial has no monic normalisation")
    return p_scale(f, fe_inv(f.lead, f.field))


def p_derivative(f: Poly) -> Poly:
    """Formal derivative; in characteristic 2 even-degree terms vanish."""
    return Poly(tuple(c if i & 1 else 0 for i, c in enumerate(f.coeffs[1:], start=1)), f.field)


def p_divmod(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    if g.is_zero():
        raise FieldDomainError("polynomial division by zero")
    F = f.field
    r = list(f.coeffs)
    dg = g.degree
    inv_lead = fe_inv(g.lead, F)
    qt = [0] * max(len(r) - dg, 0)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if not c:
            continue
        c = fe_mul(c, inv_lead, F)
        qt[i - dg] = c
        for j, y in enumerate(g.coeffs):
            if y:
                r[i - dg + j] ^= fe_mul(c, y, F)
    return Poly(tuple(qt), F), Poly(tuple(r[:dg] if dg > 0 else ()), F)


def p_mod(f: Poly, g: Poly) -> Poly:
    return p_divmod(f, g)[1]


def p_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two polynomials, not both zero."""
    if f.is_zero() and g.is_zero():
        raise FieldDomainError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, p_mod(f, g)
    return f if f.is_zero() else p_monic(f)


def p_pow_mod(f: Poly, e: int, m: Poly) -> Poly:
    result = one(f.field)
    base = p_mod(f, m)
    while e:
        if e & 1:
            result = p_mod(p_mul(result, base), m)
        base = p_mod(p_mul(base, base), m)
        e >>= 1
    return p_mod(result, m)


def p_eval(f: Poly, x: FieldElement, E: FieldDesc = None) -> FieldElement:
    """Horner evaluation at x in E, coefficients embedded from f's field."""
    F = f.field
    E = E or F
    acc = 0
    for c in reversed(f.coeffs):
        acc = fe_mul(acc, x, E) ^ fe_embed(c, F, E)
    return acc


def p_sqrt(f: Poly) -> Poly:
    """Square root of a polynomial that is a square, i.e. has f' = 0."""
    F = f.field
    if any(c for c in f.coeffs[1::2]):
        raise FieldDomainError(f"{serialize(f)} is not a square")
    return Poly(tuple(fe_root_m(c, 2, F) for c in f.coeffs[::2]), F)


def p_radical(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    F = f.field
    if f.degree <= 0:
        return one(F)
    d = p_derivative(f)
    if d.is_zero():
        return p_radical(p_sqrt(f))
    g = p_gcd(f, d)
    w = p_monic(p_divmod(f, g)[0])
    rg = p_radical(g)
    return p_monic(p_divmod(p_mul(w, rg), p_gcd(w, rg))[0])


def p_roots_by_degree(f: Poly) -> List[int]:
    """
    Degrees of the distinct irreducible factors of f, ascending.

    Distinct-degree factorisation of the radical: after removing factors of
    degree < d, gcd(h, x^(q^d) - x) collects the irreducible factors of
    degree exactly d.
    """
    F = f.field
    h = p_radical(f)
    x = monomial(1, 1, F)
    degrees: List[int] = []
    d = 0
    frob = x
    while h.degree > 0:
        d += 1
        if 2 * d > h.degree:
            degrees.append(h.degree)
            break
        for _ in range(F.n):
            frob = p_pow_mod(frob, 2, h)
        g = p_gcd(h, p_add(frob, x))
        if g.degree > 0:
            degrees.extend([d] * (g.degree // d))
            h = p_divmod(h, g)[0]
            frob = p_mod(frob, h)
    return degrees


# ---------------------------------------------------------------------------
# encodings
# ---------------------------------------------------------------------------

def pack(f: Poly) -> int:
    n = f.field.n
    bits = 0
    for i, c in enumerate(f.coeffs):
        bits |= c << (i * n)
    return bits


def unpack(bits: int, F: FieldDesc) -> Poly:
    n, mask = F.n, F.q - 1
    coeffs = []
    while bits:
        coeffs.append(bits & mask)
        bits >>= n
    return Poly(tuple(coeffs), F)


def serialize(f: Poly) -> str:
    """Comma-separated coefficients from degree 0; "0" for the zero polynomial."""
    return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"


def parse(text: str, F: FieldDesc) -> Poly:
    try:
        coeffs = [int(tok, 0) for tok in str(text).replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise MalformedInputError(f"cannot parse polynomial {text!r}") from None
    if any(c < 0 or c >= F.q for c in coeffs):
        raise MalformedInputError(f"coefficient out of range for {F} in {text!r}")
    return Poly(tuple(coeffs), F)
