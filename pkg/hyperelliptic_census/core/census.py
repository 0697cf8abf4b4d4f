"""
Enumeration of genus-g hyperelliptic curves over GF(2^n) up to isomorphism.

Every curve has a model y^2 + v y = u with v monic of degree <= g+1 and u of
degree <= 2g+2. The census fixes one v per PGL2 orbit, reduces u modulo the
substitutions y -> y + r (a GF(2)-subspace U), and then identifies the cosets
that the stabilizer of v permutes. Working on packed bit vectors keeps the
inner loop to XORs and set lookups.
"""

import logging
import multiprocessing
from collections import Counter
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from ..algebra.f2space import coboundary_space, coset_transversal, dimension, linear_map_images
from ..algebra.gf2n import FieldDesc, fe_mul, field
from ..algebra.moebius import monic_orbit_reps, psi_coeffs, require_coprime, stabilizer
from ..algebra.polyring import (
    Poly,
    p_add,
    p_derivative,
    p_gcd,
    p_mul,
    pack,
    parse,
    serialize,
    unpack,
)
from ..arithmetic.weil import two_rank
from ..arithmetic.zeta import count_vector, weil_from_counts
from .errors import PreconditionError
from .models import Curve, CurveRecord, VStats

logger = logging.getLogger(__name__)


def check_enumerable(g: int, F: FieldDesc) -> None:
    require_coprime(g, F)


def degree_window_ok(v: Poly, u: Poly, g: int) -> bool:
    top = max(u.degree, 2 * v.degree)
    return 2 * g + 1 <= top <= 2 * g + 2


def is_hyperelliptic(v: Poly, u: Poly, g: int) -> bool:
    """
    True when y^2 + v y = u is a smooth model of genus g.

    Degree window, smoothness at infinity when v has degree <= g, and
    gcd(v, u'^2 + v'^2 u) = 1 for the affine part.
    """
    if not degree_window_ok(v, u, g):
        return False
    F = v.field
    if v.degree != g + 1:
        a_top, a_next, b_g = u.coeff(2 * g + 2), u.coeff(2 * g + 1), v.coeff(g)
        if fe_mul(a_next, a_next, F) == fe_mul(a_top, fe_mul(b_g, b_g, F), F):
            return False
    du, dv = p_derivative(u), p_derivative(v)
    witness = p_add(p_mul(du, du), p_mul(p_mul(dv, dv), u))
    return p_gcd(v, witness).degree == 0


def _stabilizer_maps(v: Poly, g: int) -> List[Callable[[int], int]]:
    """GF(2)-linear maps u -> psi_{2g+2}(A, u) for the non-identity A in Stab(v)."""
    F = v.field
    m = 2 * g + 2
    maps = []
    for A in stabilizer(v, g):
        if (A.a, A.b, A.c, A.d) == (1, 0, 0, 1):
            continue
        images = []
        for i in range(m + 1):
            for j in range(F.n):
                coeffs = [0] * i + [1 << j]
                images.append(pack(Poly(tuple(psi_coeffs(A, coeffs, m)), F)))
        maps.append(linear_map_images(images))
    return maps


def enumerate_for_v(v: Poly, g: int) -> Tuple[List[Poly], VStats]:
    """
    One u per isomorphism class of curves y^2 + v y = u.

    Transversal order is increasing, so the first unvisited representative is
    the smallest member of its stabilizer orbit. The whole orbit is marked
    visited whether or not it survives the filters.
    """
    F = v.field
    U = coboundary_space(v, g)
    maps = _stabilizer_maps(v, g)
    stats = VStats(
        v=serialize(v),
        dim_U=U.rank,
        transversal_size=1 << (dimension(g, F) - U.rank),
        stabilizer_size=len(maps) + 1,
    )
    visited = set()
    kept: List[Poly] = []
    for w in coset_transversal(U):
        if w in visited:
            continue
        orbit = {w}
        for apply in maps:
            orbit.add(U.reduce(apply(w)))
        visited |= orbit
        stats.orbits += 1
        u = unpack(w, F)
        if not is_hyperelliptic(v, u, g):
            stats.discarded_cosets += len(orbit)
            continue
        kept.append(u)
        stats.orbit_sizes.append(len(orbit))
    stats.classes = len(kept)
    if not stats.accounted():
        logger.error("coset accounting failed for v=%s: %s", stats.v, stats)
    logger.debug("v=%s: %d classes from %d cosets", stats.v, stats.classes, stats.transversal_size)
    return kept, stats


def curve_record(v: Poly, u: Poly, g: int, with_counts: Optional[int] = None) -> CurveRecord:
    """Census row for one curve, with counts and Weil data when requested."""
    F = v.field
    record = CurveRecord(genus=g, n=F.n, field_poly=F.modulus, v=serialize(v), u=serialize(u))
    if with_counts:
        cv = count_vector(Curve(v, u, g), with_counts)
        record.counts = list(cv.counts)
        if with_counts >= g:
            w = weil_from_counts(cv, g)
            record.weil = list(w.a)
            record.two_rank = two_rank(w)
    return record


def _v_job(args: Tuple[int, int, int, int, Optional[int]]):
    g, n, modulus, v_bits, with_counts = args
    F = field(n, modulus)
    v = unpack(v_bits, F)
    kept, stats = enumerate_for_v(v, g)
    rows = [(v_bits, pack(u), curve_record(v, u, g, with_counts)) for u in kept]
    return rows, stats


def iter_census(g: int, F: FieldDesc, jobs: int = 1,
                with_counts: Optional[int] = None) -> Iterator[Tuple[List[Tuple[int, int, CurveRecord]], VStats]]:
    """Per-v results in completion order; parallel over v when jobs > 1."""
    check_enumerable(g, F)
    reps = monic_orbit_reps(g, F)
    tasks = [(g, F.n, F.modulus, pack(v), with_counts) for v in reps]
    logger.info("census g=%d over %s: %d choices of v, %d workers", g, F, len(tasks), jobs)
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield _v_job(t)
        return
    with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
        for result in pool.imap_unordered(_v_job, tasks):
            yield result


def enumerate_genus(g: int, F: FieldDesc, jobs: int = 1,
                    with_counts: Optional[int] = None,
                    progress: Optional[Callable[[VStats], None]] = None) -> List[CurveRecord]:
    """All isomorphism classes of genus-g curves over F, sorted by (v, u)."""
    rows: List[Tuple[int, int, CurveRecord]] = []
    for chunk, stats in iter_census(g, F, jobs, with_counts):
        rows.extend(chunk)
        if progress:
            progress(stats)
    rows.sort(key=lambda r: (r[0], r[1]))
    return [r[2] for r in rows]


def curve_of(record: CurveRecord) -> Curve:
    F = field(record.n, record.field_poly)
    return Curve(parse(record.v, F), parse(record.u, F), record.genus)


def census_summary(records: Iterable[CurveRecord]) -> Dict[str, Dict]:
    """Class counts per v and per 2-rank."""
    by_v: Counter = Counter()
    by_rank: Counter = Counter()
    for r in records:
        by_v[r.v] += 1
        if r.two_rank is not None:
            by_rank[r.two_rank] += 1
    return {"per_v": dict(by_v), "per_two_rank": dict(sorted(by_rank.items()))}
