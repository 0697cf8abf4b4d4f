import time
from itertools import combinations

import pytest

from hyperelliptic_census.algebra.f2space import coboundary_space, coset_transversal
from hyperelliptic_census.algebra.moebius import monic_orbit_reps
from hyperelliptic_census.algebra.polyring import monomial, one, pack, parse, poly, unpack
from hyperelliptic_census.arithmetic.weil import residue_pattern
from hyperelliptic_census.core.census import (
    _stabilizer_maps,
    census_summary,
    check_enumerable,
    curve_of,
    curve_record,
    degree_window_ok,
    enumerate_for_v,
    enumerate_genus,
    is_hyperelliptic,
)
from hyperelliptic_census.core.errors import PreconditionError
from hyperelliptic_census.core.models import WeilPoly
from hyperelliptic_census.algebra.gf2n import field
from hyperelliptic_census.obstructions.obstruct import generate_obstructions


def test_gcd_precondition(F16):
    with pytest.raises(PreconditionError) as exc:
        check_enumerable(4, F16)
    assert "gcd(5, 15)" in str(exc.value)
    check_enumerable(3, F16)


def test_is_hyperelliptic(F2):
    v, u = one(F2), monomial(1, 7, F2)
    assert is_hyperelliptic(v, u, 3), "y^2 + y = x^7 has genus 3"
    assert not is_hyperelliptic(v, monomial(1, 6, F2), 3), "degree window"
    assert not is_hyperelliptic(v, monomial(1, 7, F2), 2)
    # singular: v and u share the root 0 to high order
    assert not is_hyperelliptic(poly([0, 0, 1, 1], F2), monomial(1, 7, F2), 3)


def test_degree_window(F2):
    assert degree_window_ok(poly([1, 0, 0, 0, 1], F2), one(F2), 3), "2 deg v = 2g + 2"
    assert not degree_window_ok(one(F2), one(F2), 3)


def test_constant_u_allowed(F2):
    """Constant u is fine once deg v = g + 1."""
    v = poly([1, 1, 0, 1], F2)  # x^3 + x + 1, irreducible
    assert is_hyperelliptic(v, one(F2), 2)


def test_quotient_size_law(F2, F4):
    for g, F in ((2, F2), (3, F2), (3, F4)):
        for v in monic_orbit_reps(g, F):
            kept, stats = enumerate_for_v(v, g)
            assert stats.dim_U == (g + 2) * F.n - 1
            assert stats.transversal_size == 1 << ((g + 1) * F.n + 1)
            assert stats.accounted(), f"coset accounting for v={stats.v}"
            assert stats.classes == len(kept)


def test_kept_u_are_canonical_and_valid(F2):
    g = 3
    for v in monic_orbit_reps(g, F2):
        kept, _ = enumerate_for_v(v, g)
        assert [pack(u) for u in kept] == sorted(pack(u) for u in kept)
        assert all(is_hyperelliptic(v, u, g) for u in kept)


def test_census_is_sorted_and_deterministic(F2):
    records = enumerate_genus(2, F2)
    keys = [(pack(curve_of(r).v), pack(curve_of(r).u)) for r in records]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert [r.to_row() for r in enumerate_genus(2, F2, jobs=2)] == [r.to_row() for r in records]


def test_census_contains_x7(F2):
    records = enumerate_genus(3, F2, with_counts=4)
    assert any(r.counts == [3, 5, 3, 17] for r in records), "y^2 + y = x^7 must appear"
    assert all(r.weil is not None and r.two_rank is not None for r in records)


def test_curve_record_fields(F2):
    record = curve_record(one(F2), monomial(1, 7, F2), 3, with_counts=3)
    assert record.counts == [3, 5, 3]
    assert record.weil == [0, 0, -2]
    assert record.two_rank == 0
    assert record.field_poly == 0b11
    assert curve_of(record).u == parse("0,0,0,0,0,0,0,1", F2)


def test_no_census_curve_is_obstructed(F2):
    for g in (3, 4):
        records = enumerate_genus(g, F2, with_counts=g)
        for higher in (False, True):
            obstructed = {p.bits for p in generate_obstructions(g, higher_power=higher)}
            for r in records:
                pattern = residue_pattern(WeilPoly(r.q, tuple(r.weil)))
                assert pattern.bits not in obstructed, f"{r} carries obstructed {pattern}"


def test_census_summary(F2):
    records = enumerate_genus(2, F2, with_counts=2)
    summary = census_summary(records)
    assert sum(summary["per_v"].values()) == len(records)
    assert sum(summary["per_two_rank"].values()) == len(records)
    assert set(summary["per_two_rank"]) <= {0, 1, 2}


@pytest.mark.slow
def test_census_growth_band():
    counts = [len(enumerate_genus(3, field(n))) for n in (1, 2)]
    ratio = counts[1] / counts[0]
    assert 8 <= ratio <= 128, f"growth ratio {ratio} outside the hard band"


@pytest.mark.slow
def test_census_over_gf8_accounts(F8):
    g = 3
    for v in monic_orbit_reps(g, F8):
        _, stats = enumerate_for_v(v, g)
        assert stats.accounted()
        assert stats.transversal_size == 1 << ((g + 1) * F8.n + 1)


def _span(U):
    rows = list(U.rows.values())
    for size in range(len(rows) + 1):
        for subset in combinations(rows, size):
            out = 0
            for r in subset:
                out ^= r
            yield out


def test_stabilizer_preserves_coboundaries(F2, F8):
    for g, F in ((2, F2), (3, F2), (2, F8)):
        for v in monic_orbit_reps(g, F):
            U = coboundary_space(v, g)
            for apply in _stabilizer_maps(v, g):
                for row in U.rows.values():
                    assert apply(row) in U, f"U not preserved for v={v}"


def test_validity_is_constant_on_cosets(F2):
    """y -> y + r never turns a valid model into an invalid one."""
    for g in (2, 3):
        for v in monic_orbit_reps(g, F2):
            U = coboundary_space(v, g)
            members = list(_span(U))
            for w in coset_transversal(U):
                expected = is_hyperelliptic(v, unpack(w, F2), g)
                for r in members:
                    assert is_hyperelliptic(v, unpack(w ^ r, F2), g) == expected, \
                        f"v={v} u={unpack(w, F2)} shifted by {unpack(r, F2)}"


@pytest.mark.slow
def test_genus3_over_gf2_wall_clock(F2):
    start = time.perf_counter()
    records = enumerate_genus(3, F2)
    elapsed = time.perf_counter() - start
    assert records
    assert elapsed < 5.0, f"genus-3 census over GF(2) took {elapsed:.1f}s"
