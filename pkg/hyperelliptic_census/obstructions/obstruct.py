"""
Parity obstructions on Weil polynomials of curves over GF(2^n).

For a curve of 2-rank r, Frobenius permutes the r+1 Weierstrass points in
orbits of sizes d_1 + ... + d_j = r + 1, and
N_k = 2 - sum_{d_i | k} d_i (mod 2^(v_2(k)+1)).
Mod 2 the Newton identities make N_k depend only on the residues of the Weil
coefficients, so a residue pattern admitting no compatible partition can
never occur for a curve.
"""

import logging
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..core.models import ObstructionReport, Partition, ResiduePattern, Verdict

logger = logging.getLogger(__name__)

LIFT_BUDGET = 1 << 22

# Residue patterns conjectured to be obstructed that these congruences do not prove.
CONJECTURED = {3: ResiduePattern((1, 1, 0)), 4: ResiduePattern((1, 1, 0, 0))}


def partitions_of(m: int) -> List[Partition]:
    """Partitions of m, largest part first, in decreasing-largest-part order."""
    def parts(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in parts(rest - first, first):
                yield (first,) + tail
    return list(parts(m, m))


def pattern_two_rank(p: ResiduePattern) -> int:
    r = 0
    for i, b in enumerate(p.bits, start=1):
        if b:
            r = i
    return r


def parity_point_counts(p: ResiduePattern, K: int) -> Tuple[int, ...]:
    """N_1..N_K mod 2 for any curve whose Weil coefficients reduce to p."""
    g = p.genus
    e = [1] + list(p.bits) + [0] * max(K - g, 0)
    pk: List[int] = [0]
    for k in range(1, K + 1):
        total = k * e[k]
        for i in range(1, k):
            total += e[k - i] * pk[i]
        pk.append(total & 1)
    return tuple((1 + x) & 1 for x in pk[1:])


def weierstrass_count(d: Partition, k: int) -> int:
    return sum(x for x in d if k % x == 0)


def _basic_survivors(p: ResiduePattern, K: int) -> List[Partition]:
    parity = parity_point_counts(p, K)
    r = pattern_two_rank(p)
    return [d for d in partitions_of(r + 1)
            if all(weierstrass_count(d, k) % 2 == parity[k - 1] for k in range(1, K + 1))]


def _v2(k: int) -> int:
    return (k & -k).bit_length() - 1


def _power_mod(x, k: int, M: int):
    out = 1
    for _ in range(k):
        out = out * x % M
    return out


def _determined_count(p: ResiduePattern, k: int, M: int) -> Optional[int]:
    """N_k mod M if it is the same for every lift of p and every even q, else None."""
    g = p.genus
    relevant = sorted({i for i in range(1, min(k, g) + 1)}
                      | {g - j for j in range(1, k - g + 1) if 1 <= g - j})
    if (M // 2) ** (len(relevant) + 1) > LIFT_BUDGET:
        logger.info("skipping k=%d mod %d for %s: lift space too large", k, M, p)
        return None
    # one broadcast axis per lifted coefficient, the last one for q
    axes = [np.arange(p.bits[i - 1], M, 2, dtype=np.int64) for i in relevant]
    axes.append(np.arange(0, M, 2, dtype=np.int64))
    grid = np.meshgrid(*axes, indexing="ij", sparse=True)
    q = grid[-1]
    a = dict(zip(relevant, grid[:-1]))
    a[0] = 1
    e = [1]
    for i in range(1, k + 1):
        if i <= g:
            e.append((-1) ** i * a.get(i, 0))
        elif i <= 2 * g:
            j = i - g
            e.append(np.mod((-1) ** i * a.get(g - j, 0) * _power_mod(q, j, M), M))
        else:
            e.append(0)
    pk = [0]
    for m in range(1, k + 1):
        total = (-1) ** (m - 1) * m * e[m]
        for i in range(1, m):
            total = total + (-1) ** (m - 1 - i) * e[m - i] * pk[i]
        pk.append(np.mod(total, M))
    values = np.unique(np.mod(_power_mod(q, k, M) + 1 - pk[k], M))
    if len(values) != 1:
        return None
    return int(values[0])


def _higher_power_pass(p: ResiduePattern, K: int,
                       survivors: List[Partition]) -> Tuple[List[Partition], List[Tuple[int, int, int]]]:
    certificates: List[Tuple[int, int, int]] = []
    remaining = list(survivors)
    for k in range(2, K + 1, 2):
        M = 1 << (_v2(k) + 1)
        N = _determined_count(p, k, M)
        if N is None:
            continue
        if any((2 - weierstrass_count(d, k)) % M != N for d in survivors):
            certificates.append((k, M, N))
            remaining = [d for d in remaining if (2 - weierstrass_count(d, k)) % M == N]
    return remaining, certificates


def higher_power_flag(p: ResiduePattern, K: Optional[int] = None) -> List[Tuple[int, int, int]]:
    """
    Certificates (k, 2^(v2(k)+1), N_k) from even k <= K.

    Each certificate is a point count determined modulo 2^(v2(k)+1) by the
    residues alone that removes at least one partition left by the parity
    test. Odd k never yield one.
    """
    K = K or 2 * p.genus
    return _higher_power_pass(p, K, _basic_survivors(p, K))[1]


def pattern_is_obstruction(p: ResiduePattern, K: Optional[int] = None,
                           higher_power: bool = False) -> ObstructionReport:
    """Decide whether no Frobenius-orbit partition is compatible with p."""
    K = K or 2 * p.genus
    survivors = _basic_survivors(p, K)
    certificates: List[Tuple[int, int, int]] = []
    if survivors and higher_power:
        survivors, certificates = _higher_power_pass(p, K, survivors)
    if survivors:
        return ObstructionReport(p, Verdict.feasible, witness=survivors[0], certificates=certificates)
    return ObstructionReport(p, Verdict.obstructed, certificates=certificates)


def all_patterns(g: int) -> Iterator[ResiduePattern]:
    for bits in product((0, 1), repeat=g):
        yield ResiduePattern(bits)


def obstruction_reports(g: int, K: Optional[int] = None,
                        higher_power: bool = False) -> List[ObstructionReport]:
    return [pattern_is_obstruction(p, K, higher_power) for p in all_patterns(g)]


def generate_obstructions(g: int, K: Optional[int] = None,
                          higher_power: bool = False) -> List[ResiduePattern]:
    """All obstructed residue patterns of genus g."""
    found = [r.pattern for r in obstruction_reports(g, K, higher_power) if r.obstructed]
    logger.info("genus %d: %d of %d residue patterns obstructed", g, len(found), 2 ** g)
    return found


def lift_pattern(p: ResiduePattern, zeros: int) -> ResiduePattern:
    """Pad an obstructed pattern with zeros; the padded pattern is obstructed too."""
    if zeros < 0:
        raise ValueError(f"cannot pad with {zeros} zeros")
    if not pattern_is_obstruction(p, higher_power=True).obstructed:
        raise ValueError(f"{p} is not obstructed")
    return ResiduePattern(tuple(p.bits) + (0,) * zeros)


def obstruction_proportions(max_genus: int, K: Optional[int] = None) -> List[Dict[str, float]]:
    """Share of obstructed residue patterns for every genus up to max_genus."""
    rows = []
    for g in range(1, max_genus + 1):
        count = len(generate_obstructions(g, K))
        rows.append({"genus": g, "obstructed": count, "patterns": 2 ** g,
                     "proportion": count / 2 ** g})
    return rows


def conjecture_evidence(patterns: Sequence[ResiduePattern]) -> Dict[str, int]:
    """How often each conjectured pattern occurs among the given ones."""
    wanted: Set[str] = {str(p) for p in CONJECTURED.values()}
    hits = {w: 0 for w in wanted}
    for p in patterns:
        if str(p) in hits:
            hits[str(p)] += 1
    return hits
