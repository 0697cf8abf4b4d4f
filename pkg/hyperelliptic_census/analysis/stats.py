"""
Distribution of Weil polynomials by parity class.

w3_class_counts walks the genus-3 region s, t by s, t and counts the
integers u of each parity in the exact u-interval, vectorised over t with
numpy. float64 is only a seed for integer square roots: any seed within
SEED_MARGIN of an integer is recomputed with math.isqrt, so every boundary
lattice point is decided exactly.
"""

import logging
import multiprocessing
from fractions import Fraction
from math import comb, factorial, isqrt
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd
import sympy

from ..arithmetic.weil import is_weil_poly, real_roots_in_interval, weil_from_real
from ..core.models import ClassCountTable, ResiduePattern, WeilPoly
from ..obstructions.obstruct import generate_obstructions

logger = logging.getLogger(__name__)

SEED_MARGIN = 1e-3
OBSTRUCTED_W3 = ((0, 1, 1), (1, 0, 1))
W3_METHODS = ("lattice", "scan")


def _exact_floor_sqrt(approx: np.ndarray, exact_square: Callable[[int], int]) -> np.ndarray:
    """floor(sqrt(R)) given a float estimate; ambiguous entries go through isqrt."""
    m = np.floor(approx).astype(np.int64)
    frac = approx - np.floor(approx)
    ambiguous = np.nonzero((frac < SEED_MARGIN) | (frac > 1 - SEED_MARGIN))[0]
    for idx in ambiguous.tolist():
        m[idx] = isqrt(exact_square(idx))
    return m


def _parity_split(lo: np.ndarray, hi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(even, odd) integer counts in [lo, hi], zero where the interval is empty."""
    valid = hi >= lo
    evens = np.where(valid, hi // 2 - (lo - 1) // 2, 0)
    odds = np.where(valid, hi - lo + 1, 0) - evens
    return evens, odds


def _counts_for_s(args: Tuple[int, int]) -> Dict[Tuple[int, int, int], int]:
    s, q = args
    out: Dict[Tuple[int, int, int], int] = {}
    r = isqrt(16 * q * s * s)
    ceil_root = r if r * r == 16 * q * s * s else r + 1
    t_lo = max(ceil_root - 9 * q, -q)
    t_hi = (s * s + 9 * q) // 3
    if t_hi < t_lo:
        return out
    t = np.arange(t_lo, t_hi + 1, dtype=np.int64)

    D = s * s - 3 * t + 9 * q
    Df = D.astype(np.float64)
    m = _exact_floor_sqrt(2.0 * Df * np.sqrt(Df), lambda i: 4 * int(D[i]) ** 3)
    K = 2 * s ** 3 - 9 * s * t - 27 * q * s
    lo1 = -((m + K) // 27)
    hi1 = (m - K) // 27

    tq = t + q
    root_q = isqrt(q)
    if root_q * root_q == q:
        m2 = 2 * root_q * tq
    else:
        m2 = _exact_floor_sqrt(2.0 * np.sqrt(q) * tq.astype(np.float64),
                               lambda i: 4 * q * int(tq[i]) ** 2)
    lo = np.maximum(lo1, -2 * q * s - m2)
    hi = np.minimum(hi1, -2 * q * s + m2)

    evens, odds = _parity_split(lo, hi)
    t_odd = (t & 1).astype(bool)
    sp = s & 1
    for tp, mask in ((0, ~t_odd), (1, t_odd)):
        out[(sp, tp, 0)] = int(evens[mask].sum())
        out[(sp, tp, 1)] = int(odds[mask].sum())
    return out


def w3_class_counts(q: int, jobs: int = 1) -> ClassCountTable:
    """Genus-3 Weil polynomials over GF(q) counted by (s, t, u) mod 2."""
    S = isqrt(36 * q)
    tasks = [(s, q) for s in range(-S, S + 1)]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_counts_for_s, tasks)
    else:
        parts = [_counts_for_s(t) for t in tasks]
    counts = {(a, b, c): 0 for a in (0, 1) for b in (0, 1) for c in (0, 1)}
    for part in parts:
        for key, value in part.items():
            counts[key] += value
    table = ClassCountTable(q, counts)
    logger.info("q=%d: %d genus-3 Weil polynomials", q, table.total)
    return table


def tau3(q: int, jobs: int = 1) -> Tuple[Fraction, Fraction]:
    """Obstructed share among u-odd (ordinary) classes and among all."""
    return tau_from_table(w3_class_counts(q, jobs))


def isogeny_count_estimate(g: int, q: int) -> sympy.Expr:
    """
    Leading-order count of isogeny classes of g-dimensional abelian
    varieties over GF(q), exact in q.
    """
    prod = sympy.Integer(1)
    for i in range(1, g + 1):
        prod *= sympy.Rational(2 * i, 2 * i - 1) ** (g + 1 - i)
    r = sympy.Rational(sympy.totient(q), q)
    v_g = sympy.Rational(2 ** g, factorial(g)) * prod
    return sympy.simplify(v_g * r * sympy.Integer(q) ** sympy.Rational(g * (g + 1), 4))


# ---------------------------------------------------------------------------
# exhaustive scans in any genus
# ---------------------------------------------------------------------------

def _derivative_real_rooted(h: Sequence[int], order: int, q: int) -> bool:
    """order-th derivative of h (leading first) real-rooted inside [-2 sqrt q, 2 sqrt q]."""
    deg = len(h) - 1
    d = [h[i] * factorial(deg - i) // factorial(deg - i - order) for i in range(deg - order + 1)]
    return real_roots_in_interval(d, q)


def iter_weil_polys(g: int, q: int) -> Iterable[WeilPoly]:
    """
    Every Weil polynomial of genus g over GF(q).

    Coefficients of the real polynomial h are fixed highest first; a prefix
    b_1..b_d fixes the (g-d)-th derivative of h, which must itself be
    real-rooted inside the interval.
    """
    bounds = [isqrt(comb(g, d) ** 2 * (4 * q) ** d) for d in range(g + 1)]

    def extend(prefix: List[int]) -> Iterable[WeilPoly]:
        d = len(prefix)
        if d == g + 1:
            w = weil_from_real(prefix, q)
            if is_weil_poly(w):
                yield w
            return
        for b in range(-bounds[d], bounds[d] + 1):
            candidate = prefix + [b]
            if d < g and not _derivative_real_rooted(candidate + [0] * (g - d), g - d, q):
                continue
            yield from extend(candidate)

    yield from extend([1])


def weil_scan(g: int, q: int) -> Dict[Tuple[int, ...], int]:
    """Weil polynomials of genus g over GF(q) counted by residue pattern."""
    counts: Dict[Tuple[int, ...], int] = {bits: 0 for bits in
                                          (tuple(p) for p in np.ndindex(*(2,) * g))}
    for w in iter_weil_polys(g, q):
        counts[tuple(a % 2 for a in w.a)] += 1
    return counts


def tau4(q: int) -> Tuple[Fraction, Fraction]:
    """Genus-4 obstructed share (with the higher-power patterns) among ordinary and all."""
    counts = weil_scan(4, q)
    obstructed = {p.bits for p in generate_obstructions(4, higher_power=True)}
    hit = sum(c for bits, c in counts.items() if bits in obstructed)
    ordinary = sum(c for bits, c in counts.items() if bits[-1] == 1)
    total = sum(counts.values())
    return Fraction(hit, ordinary), Fraction(hit, total)


def scan_class_table(q: int) -> ClassCountTable:
    """Genus-3 class table from the exhaustive scan."""
    return ClassCountTable(q, weil_scan(3, q))


def _class_label(cls: Tuple[int, ...]) -> str:
    return "".join(str(b) for b in cls)


def class_table_frame(tables: Iterable[ClassCountTable]) -> pd.DataFrame:
    """One row per (q, class) with counts and proportions."""
    rows = []
    for table in tables:
        for cls, count in sorted(table.counts.items()):
            rows.append({
                "q": table.q,
                "class": _class_label(cls),
                "count": count,
                "proportion": count / table.total if table.total else 0.0,
                "obstructed": cls in OBSTRUCTED_W3,
            })
    return pd.DataFrame(rows)


def pattern_counts_frame(counts: Dict[Tuple[int, ...], int], q: int) -> pd.DataFrame:
    total = sum(counts.values())
    return pd.DataFrame([
        {"q": q, "pattern": str(ResiduePattern(bits)), "count": c,
         "proportion": c / total if total else 0.0}
        for bits, c in sorted(counts.items())
    ])


def deviation_from_uniform(table: ClassCountTable) -> float:
    return max(abs(table.proportion(c) - 1 / 8) for c in table.counts)


def tau_from_table(table: ClassCountTable) -> Tuple[Fraction, Fraction]:
    obstructed = sum(table.counts[c] for c in OBSTRUCTED_W3)
    return Fraction(obstructed, table.ordinary()), Fraction(obstructed, table.total)


def w3_summary(ns: Sequence[int], jobs: int = 1, with_tau: bool = False,
               method: str = "lattice") -> pd.DataFrame:
    """
    One row per q = 2^n: the eight class counts, their total, and the
    obstructed and ordinary counts that tau3 divides.

    method="lattice" counts the closed region; method="scan" enumerates
    every Weil polynomial and is only practical for small q.
    """
    if method not in W3_METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {W3_METHODS}")
    if method == "lattice":
        tables = [w3_class_counts(1 << n, jobs) for n in ns]
    else:
        tables = [scan_class_table(1 << n) for n in ns]
    by_q = {t.q: t for t in tables}
    frame = class_table_frame(tables).pivot(index="q", columns="class", values="count").reset_index()
    frame.columns.name = None
    frame["total"] = frame["q"].map(lambda q: by_q[q].total)
    frame["obstructed"] = frame[[_class_label(c) for c in OBSTRUCTED_W3]].sum(axis=1)
    frame["ordinary"] = frame["q"].map(lambda q: by_q[q].ordinary())
    frame["method"] = method
    if with_tau:
        frame["tau_ordinary"] = frame["obstructed"] / frame["ordinary"]
        frame["tau_all"] = frame["obstructed"] / frame["total"]
    return frame
