"""
Brute-force reference implementations used to certify the fast paths.

brute_enumerate classifies every valid pair (v, u) with a union-find over
the generators of the isomorphism group: PGL2 generators (followed by the
scaling that makes v monic again) and the substitutions y -> y + r for r in
a GF(2)-basis. It does not use cosets, stabilizers or the gcd precondition.
"""

import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Tuple

from ..algebra.gf2n import FieldDesc, fe_inv, fe_mul
from ..algebra.moebius import monic_polys, pgl2_generators, psi_coeffs
from ..algebra.polyring import Poly, mul_lists, pack, unpack
from ..arithmetic.weil import is_weil_poly
from ..core.census import curve_of, is_hyperelliptic
from ..core.models import ClassCountTable, CurveRecord, WeilPoly

logger = logging.getLogger(__name__)


class UnionFind:
    def __init__(self):
        self.parent: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        for x in (a, b):
            if x not in self.parent:
                logger.warning("move left the valid set: %s", x)
                self.add(x)
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller pair as root
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass
class OracleCensus:
    """Isomorphism classes of valid pairs, keyed by packed (v, u)."""

    genus: int
    field: FieldDesc
    uf: UnionFind = field(default_factory=UnionFind)

    def class_of(self, v: Poly, u: Poly) -> Tuple[int, int]:
        return self.uf.find((pack(v), pack(u)))

    def class_of_record(self, record: CurveRecord) -> Tuple[int, int]:
        c = curve_of(record)
        return self.class_of(c.v, c.u)

    def classes(self) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
        out: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for x in self.uf.parent:
            out.setdefault(self.uf.find(x), []).append(x)
        return out

    def representatives(self) -> List[Tuple[Poly, Poly]]:
        F = self.field
        return [(unpack(v, F), unpack(u, F)) for v, u in sorted(self.classes())]


def _all_u(g: int, F: FieldDesc):
    for bits in range(1 << ((2 * g + 3) * F.n)):
        yield bits


def _matrix_move(A, v: Poly, u: Poly, g: int) -> Tuple[int, int]:
    F = v.field
    v2 = psi_coeffs(A, v.coeffs, g + 1)
    u2 = psi_coeffs(A, u.coeffs, 2 * g + 2)
    while v2 and not v2[-1]:
        v2.pop()
    mu = fe_inv(v2[-1], F)
    mu2 = fe_mul(mu, mu, F)
    return (pack(Poly(tuple(fe_mul(mu, x, F) for x in v2), F)),
            pack(Poly(tuple(fe_mul(mu2, x, F) for x in u2), F)))


def _shift_move(r: List[int], v: Poly, u_bits: int, F: FieldDesc) -> int:
    rv = mul_lists(r, v.coeffs, F)
    r2 = mul_lists(r, r, F)
    size = max(len(rv), len(r2))
    total = [0] * size
    for k, x in enumerate(rv):
        total[k] ^= x
    for k, x in enumerate(r2):
        total[k] ^= x
    return u_bits ^ pack(Poly(tuple(total), F))


def brute_enumerate(g: int, F: FieldDesc) -> OracleCensus:
    """Classify all valid (v, u) over F by union-find; feasible for tiny q and g."""
    oracle = OracleCensus(g, F)
    valid = []
    for v in monic_polys(g, F):
        vb = pack(v)
        for ub in _all_u(g, F):
            u = unpack(ub, F)
            if is_hyperelliptic(v, u, g):
                oracle.uf.add((vb, ub))
                valid.append((v, u, vb, ub))
    logger.info("oracle: %d valid pairs for g=%d over %s", len(valid), g, F)
    gens = pgl2_generators(F)
    shifts = [[0] * i + [1 << j] for i in range(g + 2) for j in range(F.n)]
    for v, u, vb, ub in valid:
        for A in gens:
            oracle.uf.union((vb, ub), _matrix_move(A, v, u, g))
        for r in shifts:
            oracle.uf.union((vb, ub), (vb, _shift_move(r, v, ub, F)))
    return oracle


def brute_w3_scan(q: int) -> ClassCountTable:
    """Genus-3 Weil polynomials by exhaustive is_weil_poly over a bounding box."""
    S = isqrt(36 * q)
    T = 15 * q
    Ub = isqrt(400 * q ** 3)
    counts = {(a, b, c): 0 for a in (0, 1) for b in (0, 1) for c in (0, 1)}
    for s in range(-S, S + 1):
        for t in range(-T, T + 1):
            for u in range(-Ub, Ub + 1):
                if is_weil_poly(WeilPoly(q, (s, t, u))):
                    counts[(s & 1, t & 1, u & 1)] += 1
    return ClassCountTable(q, counts)
