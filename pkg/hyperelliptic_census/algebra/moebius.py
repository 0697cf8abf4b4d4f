"""
The twisted Moebius action of GL2(F) on polynomials of bounded degree.

psi_m(A, f)(x) = sum_i f_i (a x + b)^i (c x + d)^(m - i)

treats f as a binary form of degree m. It satisfies
psi_m(A) o psi_m(B) = psi_m(B A), so f . A := psi_m(A, f) is a right action.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from ..core.errors import PreconditionError
from .gf2n import FieldDesc, FieldElement, fe_inv, fe_mul, fe_root_m
from .polyring import Poly, mul_lists, pack, unpack

logger = logging.getLogger(__name__)


def require_coprime(g: int, F: FieldDesc) -> None:
    """The action is only defined when (g+1)-th roots are unique in F."""
    if gcd(g + 1, F.order) != 1:
        raise PreconditionError(
            f"gcd(g+1, 2^n-1) = gcd({g + 1}, {F.order}) = {gcd(g + 1, F.order)} != 1"
        )


@dataclass(frozen=True)
class ProjMatrix:
    """A 2x2 matrix (a b; c d) over F with ad + bc != 0."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    field: FieldDesc

    def det(self) -> FieldElement:
        F = self.field
        return fe_mul(self.a, self.d, F) ^ fe_mul(self.b, self.c, F)

    def scaled(self, lam: FieldElement) -> "ProjMatrix":
        F = self.field
        return ProjMatrix(fe_mul(lam, self.a, F), fe_mul(lam, self.b, F),
                          fe_mul(lam, self.c, F), fe_mul(lam, self.d, F), F)

    def canonical(self) -> "ProjMatrix":
        """Representative whose first nonzero entry is 1."""
        first = next(x for x in (self.a, self.b, self.c, self.d) if x)
        return self.scaled(fe_inv(first, self.field))

    def is_canonical(self) -> bool:
        return next(x for x in (self.a, self.b, self.c, self.d) if x) == 1

    def __matmul__(self, other: "ProjMatrix") -> "ProjMatrix":
        F = self.field
        m = lambda x, y: fe_mul(x, y, F)  # noqa: E731
        return ProjMatrix(
            m(self.a, other.a) ^ m(self.b, other.c),
            m(self.a, other.b) ^ m(self.b, other.d),
            m(self.c, other.a) ^ m(self.d, other.c),
            m(self.c, other.b) ^ m(self.d, other.d),
            F,
        )


def identity(F: FieldDesc) -> ProjMatrix:
    return ProjMatrix(1, 0, 0, 1, F)


def pgl2_generators(F: FieldDesc) -> List[ProjMatrix]:
    """diag(alpha, 1), the translation x -> x + 1 and the inversion x -> 1/x."""
    return [
        ProjMatrix(F.alpha, 0, 0, 1, F),
        ProjMatrix(1, 1, 0, 1, F),
        ProjMatrix(0, 1, 1, 0, F),
    ]


def pgl2_elements(F: FieldDesc) -> Iterator[ProjMatrix]:
    """All q^3 - q canonical classes of PGL2(F)."""
    q = F.q
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    first = a or b or c or d
                    if first != 1:
                        continue
                    if fe_mul(a, d, F) ^ fe_mul(b, c, F):
                        yield ProjMatrix(a, b, c, d, F)


def pgl2_order(F: FieldDesc) -> int:
    return F.q ** 3 - F.q


# ---------------------------------------------------------------------------
# the action
# ---------------------------------------------------------------------------

def _powers(lin: Sequence[int], m: int, F: FieldDesc) -> List[List[int]]:
    out = [[1]]
    for _ in range(m):
        out.append(mul_lists(out[-1], lin, F))
    return out


@lru_cache(maxsize=4096)
def _terms(A: ProjMatrix, m: int) -> Tuple[Tuple[int, ...], ...]:
    """(a x + b)^i (c x + d)^(m - i) for i = 0..m."""
    F = A.field
    P = _powers([A.b, A.a], m, F)
    Q = _powers([A.d, A.c], m, F)
    return tuple(tuple(mul_lists(P[i], Q[m - i], F)) for i in range(m + 1))


def psi_coeffs(A: ProjMatrix, coeffs: Sequence[int], m: int) -> List[int]:
    """psi_m on a raw coefficient list (length <= m + 1), result padded to m + 1."""
    F = A.field
    terms = _terms(A, m)
    out = [0] * (m + 1)
    for i, fi in enumerate(coeffs):
        if not fi:
            continue
        term = terms[i]
        for k, t in enumerate(term):
            if t:
                out[k] ^= fe_mul(fi, t, F)
    return out


def psi(A: ProjMatrix, f: Poly, m: int) -> Poly:
    if f.degree > m:
        raise PreconditionError(f"degree {f.degree} exceeds form degree {m}")
    return Poly(tuple(psi_coeffs(A, f.coeffs, m)), f.field)


def normalizing_scalar(A: ProjMatrix, f: Poly, g: int) -> FieldElement:
    """lambda with psi_{g+1}(lambda A, f) monic."""
    image = psi(A, f, g + 1)
    return fe_root_m(fe_inv(image.lead, f.field), g + 1, f.field)


def act_monic(A: ProjMatrix, f: Poly, g: int) -> Poly:
    """psi_{g+1}(A, f) rescaled to be monic."""
    require_coprime(g, f.field)
    image = psi_coeffs(A, f.coeffs, g + 1)
    F = f.field
    while image and not image[-1]:
        image.pop()
    inv = fe_inv(image[-1], F)
    return Poly(tuple(fe_mul(x, inv, F) for x in image), F)


def _act_monic_packed(A: ProjMatrix, bits: int, g: int) -> int:
    F = A.field
    return pack(act_monic(A, unpack(bits, F), g))


def monic_polys(g: int, F: FieldDesc) -> Iterator[Poly]:
    """Every monic polynomial of degree <= g + 1."""
    q = F.q
    for deg in range(g + 2):
        for low in range(q ** deg):
            coeffs = []
            for _ in range(deg):
                coeffs.append(low % q)
                low //= q
            yield Poly(tuple(coeffs) + (1,), F)


def monic_orbits(g: int, F: FieldDesc) -> Dict[int, List[int]]:
    """Orbits of PGL2(F) on monic polys, keyed by their smallest packed member."""
    require_coprime(g, F)
    gens = pgl2_generators(F)
    seen: Set[int] = set()
    orbits: Dict[int, List[int]] = {}
    for f in monic_polys(g, F):
        start = pack(f)
        if start in seen:
            continue
        seen.add(start)
        orbit = [start]
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for A in gens:
                nxt = _act_monic_packed(A, cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    orbit.append(nxt)
                    queue.append(nxt)
        orbits[min(orbit)] = sorted(orbit)
    return orbits


def monic_orbit_reps(g: int, F: FieldDesc) -> List[Poly]:
    """Smallest member of every PGL2 orbit on monic polys of degree <= g + 1."""
    orbits = monic_orbits(g, F)
    total = sum(len(o) for o in orbits.values())
    logger.info(
        "%d monic orbits over %s for genus %d; mean stabilizer size %.2f",
        len(orbits), F, g, len(orbits) * pgl2_order(F) / total,
    )
    return [unpack(rep, F) for rep in sorted(orbits)]


def stabilizer(v: Poly, g: int) -> List[ProjMatrix]:
    """
    Stab of v in PGL2(F), each class rescaled so that psi_{g+1}(A, v) = v.
    """
    F = v.field
    require_coprime(g, F)
    target = list(v.coeffs) + [0] * (g + 1 - v.degree)
    out = []
    for A in pgl2_elements(F):
        image = psi_coeffs(A, v.coeffs, g + 1)
        lead = image[v.degree]
        if not lead:
            continue
        inv = fe_inv(lead, F)
        if [fe_mul(x, inv, F) for x in image] != target:
            continue
        out.append(A.scaled(fe_root_m(inv, g + 1, F)))
    return out


def burnside_orbit_count(g: int, F: FieldDesc) -> int:
    """Number of orbits on monic polys via Burnside's lemma."""
    fixed = 0
    monics = list(monic_polys(g, F))
    for A in pgl2_elements(F):
        fixed += sum(1 for f in monics if act_monic(A, f, g) == f)
    count, rem = divmod(fixed, pgl2_order(F))
    assert rem == 0, "Burnside sum not divisible by the group order"
    return count


def mean_stabilizer_size(g: int, F: FieldDesc) -> float:
    orbits = monic_orbits(g, F)
    total = sum(len(o) for o in orbits.values())
    return len(orbits) * pgl2_order(F) / total


def orbit_sizes(g: int, F: FieldDesc) -> Tuple[int, ...]:
    return tuple(len(o) for _, o in sorted(monic_orbits(g, F).items()))
