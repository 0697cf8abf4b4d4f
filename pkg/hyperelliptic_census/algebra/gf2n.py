"""
Arithmetic in GF(2^n).

Elements are plain ints whose bit j is the coefficient of alpha^j, where
alpha is a root of the field modulus. Fields up to 2^16 elements multiply
through log/antilog tables built with numpy; larger fields (only reached by
point counting over extensions) use shift-and-reduce.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple

import numpy as np

from ..core.errors import FieldDomainError, MalformedInputError, PreconditionError
from .conway import CONWAY_POLYNOMIALS, MAX_CONWAY_DEGREE, conway_polynomial

logger = logging.getLogger(__name__)

FieldElement = int

TABLE_MAX_DEGREE = 16


@dataclass(frozen=True)
class FieldDesc:
    """A finite field GF(2^n) given by its modulus."""

    n: int
    modulus: int

    @property
    def q(self) -> int:
        return 1 << self.n

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return (1 << self.n) - 1

    @property
    def is_conway(self) -> bool:
        return CONWAY_POLYNOMIALS.get(self.n) == self.modulus

    @property
    def alpha(self) -> FieldElement:
        return 2 if self.n > 1 else 1

    def elements(self) -> range:
        return range(self.q)

    def __str__(self) -> str:
        return f"GF(2^{self.n})"


# ---------------------------------------------------------------------------
# carry-less arithmetic on packed GF(2)[x] polynomials
# ---------------------------------------------------------------------------

def _clmul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def _clmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _clgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _clmod(a, b)
    return a


def _prime_factors(k: int) -> List[int]:
    factors, p = [], 2
    while p * p <= k:
        if k % p == 0:
            factors.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        factors.append(k)
    return factors


def is_irreducible(modulus: int) -> bool:
    """Rabin's irreducibility test for a packed GF(2)[x] polynomial."""
    n = modulus.bit_length() - 1
    if n < 1:
        return False

    def x_pow_2k(k: int) -> int:
        r = 0b10
        for _ in range(k):
            r = _clmod(_clmul(r, r), modulus)
        return r

    if x_pow_2k(n) != _clmod(0b10, modulus):
        return False
    for p in _prime_factors(n):
        if _clgcd(modulus, x_pow_2k(n // p) ^ 0b10) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# field construction and per-field caches
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def field(n: int, modulus: Optional[int] = None) -> FieldDesc:
    """Return GF(2^n), by default with its Conway modulus."""
    if n < 1:
        raise PreconditionError(f"field degree must be positive, got {n}")
    if modulus is None:
        return FieldDesc(n, conway_polynomial(n))
    if modulus.bit_length() - 1 != n or not is_irreducible(modulus):
        raise MalformedInputError(f"modulus {modulus:#x} is not irreducible of degree {n}")
    return FieldDesc(n, modulus)


def parse_field(n: int, field_poly: Optional[str] = None) -> FieldDesc:
    """Build a field from a CLI/JSON modulus given as an int literal."""
    if field_poly is None:
        return field(n)
    try:
        modulus = int(field_poly, 0)
    except ValueError:
        raise MalformedInputError(f"cannot parse field polynomial {field_poly!r}") from None
    return field(n, modulus)


@dataclass(frozen=True)
class _Tables:
    exp: List[int]   # exp[i] = alpha^i, doubled length to skip a modulo
    log: List[int]   # log[0] is unused


@lru_cache(maxsize=None)
def _tables(F: FieldDesc) -> Optional[_Tables]:
    if F.n > TABLE_MAX_DEGREE:
        return None
    order = F.order
    exp = np.zeros(2 * order + 1, dtype=np.int64)
    x = 1
    for i in range(order):
        exp[i] = x
        x <<= 1
        if x >> F.n:
            x ^= F.modulus
    if x != 1 or (order > 1 and len(set(exp[:order].tolist())) != order):
        # alpha is not primitive for this (non-Conway) modulus
        logger.debug("modulus %#x is not primitive; falling back to shift-and-reduce", F.modulus)
        return None
    exp[order:2 * order] = exp[:order]
    exp[2 * order] = exp[0]
    log = np.zeros(F.q, dtype=np.int64)
    log[exp[:order]] = np.arange(order, dtype=np.int64)
    return _Tables(exp=exp.tolist(), log=log.tolist())


@lru_cache(maxsize=None)
def trace_mask(F: FieldDesc) -> int:
    """Bit mask with Tr(a) = parity(a & mask), trace being GF(2)-linear."""
    mask = 0
    for j in range(F.n):
        if _trace_slow(1 << j, F):
            mask |= 1 << j
    return mask


def _trace_slow(a: int, F: FieldDesc) -> int:
    t, x = 0, a
    for _ in range(F.n):
        t ^= x
        x = _mul_reduce(x, x, F)
    return t


def _mul_reduce(a: int, b: int, F: FieldDesc) -> int:
    n, m = F.n, F.modulus
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= m
    return r


# ---------------------------------------------------------------------------
# element operations
# ---------------------------------------------------------------------------

def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a ^ b


def fe_mul(a: FieldElement, b: FieldElement, F: FieldDesc) -> FieldElement:
    if not a or not b:
        return 0
    t = _tables(F)
    if t is None:
        return _mul_reduce(a, b, F)
    return t.exp[t.log[a] + t.log[b]]


def fe_sqr(a: FieldElement, F: FieldDesc) -> FieldElement:
    return fe_mul(a, a, F)


def fe_pow(a: FieldElement, e: int, F: FieldDesc) -> FieldElement:
    """a^e; negative exponents invert first."""
    if e < 0:
        return fe_pow(fe_inv(a, F), -e, F)
    if e == 0:
        return 1
    if not a:
        return 0
    t = _tables(F)
    if t is not None:
        return t.exp[(t.log[a] * e) % F.order]
    result = 1
    while e:
        if e & 1:
            result = _mul_reduce(result, a, F)
        a = _mul_reduce(a, a, F)
        e >>= 1
    return result


def fe_inv(a: FieldElement, F: FieldDesc) -> FieldElement:
    if not a:
        raise FieldDomainError(f"zero has no inverse in {F}")
    t = _tables(F)
    if t is not None:
        return t.exp[F.order - t.log[a]]
    return fe_pow(a, F.order - 1, F)


def fe_div(a: FieldElement, b: FieldElement, F: FieldDesc) -> FieldElement:
    return fe_mul(a, fe_inv(b, F), F)


def fe_trace(a: FieldElement, F: FieldDesc) -> int:
    """Absolute trace to GF(2)."""
    return bin(a & trace_mask(F)).count("1") & 1


def fe_root_m(a: FieldElement, m: int, F: FieldDesc) -> FieldElement:
    """The unique m-th root of a; requires gcd(m, 2^n - 1) = 1."""
    if gcd(m, F.order) != 1:
        raise PreconditionError(f"gcd({m}, {F.order}) != 1: {m}-th roots are not unique in {F}")
    if not a:
        return 0
    if F.order == 1:
        return a
    return fe_pow(a, pow(m, -1, F.order), F)


def fe_log(a: FieldElement, F: FieldDesc) -> int:
    """Discrete logarithm to base alpha; table-backed fields only."""
    t = _tables(F)
    if t is None or not a:
        raise FieldDomainError(f"no logarithm for {a} in {F}")
    return t.log[a]


# ---------------------------------------------------------------------------
# embeddings into Conway fields
# ---------------------------------------------------------------------------

def _modulus_root(F: FieldDesc, E: FieldDesc, generator: FieldElement) -> FieldElement:
    """A root in E of F's modulus, searched among powers of the subfield generator."""
    x = generator
    for _ in range(F.order):
        acc = 0
        for i in range(F.n, -1, -1):
            acc = fe_mul(acc, x, E) ^ ((F.modulus >> i) & 1)
        if not acc:
            return x
        x = fe_mul(x, generator, E)
    raise PreconditionError(f"modulus of {F} has no root in {E}")


@lru_cache(maxsize=None)
def _embedding_basis(F: FieldDesc, E: FieldDesc) -> Tuple[int, ...]:
    if E.n % F.n != 0:
        raise PreconditionError(f"{F} is not a subfield of {E}")
    if not E.is_conway:
        raise PreconditionError("embeddings are only defined into Conway fields")
    beta = fe_pow(E.alpha, E.order // F.order, E) if F.order > 1 else 1
    if not F.is_conway:
        beta = _modulus_root(F, E, beta)
    basis, x = [], 1
    for _ in range(F.n):
        basis.append(x)
        x = fe_mul(x, beta, E)
    return tuple(basis)


def fe_embed(a: FieldElement, F: FieldDesc, E: FieldDesc) -> FieldElement:
    """
    Image of a under an embedding F -> E.

    Between Conway fields this is the compatible embedding; a base field with
    any other modulus goes to one root of that modulus, which leaves point
    counts unchanged.
    """
    if F == E:
        return a
    basis = _embedding_basis(F, E)
    result, j = 0, 0
    while a:
        if a & 1:
            result ^= basis[j]
        a >>= 1
        j += 1
    return result


def extension(F: FieldDesc, k: int) -> FieldDesc:
    """F itself for k = 1, else the Conway field of degree n*k."""
    if k == 1:
        return F
    if F.n * k > MAX_CONWAY_DEGREE:
        raise PreconditionError(
            f"extension degree {F.n * k} exceeds the Conway table (max {MAX_CONWAY_DEGREE})"
        )
    return field(F.n * k)


def field_tables(F: FieldDesc) -> Optional[Tuple[List[int], List[int]]]:
    """(exp, log) tables if F is table-backed, else None."""
    t = _tables(F)
    return None if t is None else (t.exp, t.log)
