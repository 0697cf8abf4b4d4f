"""
GF(2)-linear algebra on packed polynomials.

A polynomial of degree <= 2g+2 over GF(2^n) is a bit vector of length
(2g+3)n; coordinate (i, j) is bit i*n + j, the coefficient of alpha^j x^i.
Vectors are plain ints and addition is XOR.

Subspaces are kept in reduced echelon form with the highest set bit of each
row as its pivot. Zeroing the pivot coordinates of a vector then yields the
smallest vector of its coset, which is the canonical coset representative.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .gf2n import FieldDesc, fe_mul
from .polyring import Poly, mul_lists, pack

logger = logging.getLogger(__name__)

BitVec = int


@dataclass
class Subspace:
    """Reduced echelon basis of a subspace of GF(2)^dim."""

    dim: int
    rows: Dict[int, BitVec] = field(default_factory=dict)  # pivot bit -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def free_coordinates(self) -> List[int]:
        return [i for i in range(self.dim) if i not in self.rows]

    def reduce(self, w: BitVec) -> BitVec:
        for p in sorted(self.rows, reverse=True):
            if (w >> p) & 1:
                w ^= self.rows[p]
        return w

    def add(self, w: BitVec) -> bool:
        """Insert w; returns False when w was already in the span."""
        w = self.reduce(w)
        if not w:
            return False
        p = w.bit_length() - 1
        for q, row in list(self.rows.items()):
            if (row >> p) & 1:
                self.rows[q] = row ^ w
        self.rows[p] = w
        return True

    def __contains__(self, w: BitVec) -> bool:
        return self.reduce(w) == 0


def subspace_span(dim: int, generators: Iterable[BitVec]) -> Subspace:
    U = Subspace(dim)
    for w in generators:
        U.add(w)
    return U


def coset_reduce(w: BitVec, U: Subspace) -> BitVec:
    """Canonical representative of w + U: all pivot coordinates cleared."""
    return U.reduce(w)


def coset_transversal(U: Subspace, shard: Optional[Tuple[int, int]] = None) -> Iterator[BitVec]:
    """
    All canonical coset representatives in increasing order.

    shard=(index, count) restricts to a contiguous block of the 2^free range.
    """
    free = U.free_coordinates()
    total = 1 << len(free)
    start, stop = 0, total
    if shard is not None:
        index, count = shard
        start, stop = total * index // count, total * (index + 1) // count
    for k in range(start, stop):
        w, j = 0, 0
        while k:
            if k & 1:
                w |= 1 << free[j]
            k >>= 1
            j += 1
        yield w


def dimension(g: int, F: FieldDesc) -> int:
    return (2 * g + 3) * F.n


def coboundary_space(v: Poly, g: int) -> Subspace:
    """
    U = span{ r v + r^2 : r = alpha^j x^i, i <= g+1, j < n }.

    Adding an element of U to u is the substitution y -> y + r, which does
    not change the curve y^2 + v y = u up to isomorphism.
    """
    F = v.field
    dim = dimension(g, F)
    gens = []
    for i in range(g + 2):
        for j in range(F.n):
            c = 1 << j
            r = [0] * i + [c]
            rv = mul_lists(r, v.coeffs, F)
            r2 = [0] * (2 * i) + [fe_mul(c, c, F)]
            total = [0] * max(len(rv), len(r2))
            for k, x in enumerate(rv):
                total[k] ^= x
            for k, x in enumerate(r2):
                total[k] ^= x
            gens.append(pack(Poly(tuple(total), F)))
    U = subspace_span(dim, gens)
    expected = (g + 2) * F.n - 1
    if U.rank != expected:
        logger.warning("coboundary rank %d differs from expected %d for v=%s", U.rank, expected, v)
    return U


def linear_map_images(images: List[BitVec]):
    """Turn per-basis-vector images into a callable applying the GF(2)-linear map."""
    def apply(w: BitVec) -> BitVec:
        out, j = 0, 0
        while w:
            if w & 1:
                out ^= images[j]
            w >>= 1
            j += 1
        return out
    return apply
