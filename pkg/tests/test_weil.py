from itertools import product
from math import isqrt

import pytest
import sympy

from hyperelliptic_census.arithmetic.weil import (
    count_real_roots,
    expand_coeffs,
    in_w3_region,
    is_ordinary,
    is_weil_poly,
    real_roots_in_interval,
    real_weil_poly,
    residue_pattern,
    two_rank,
    weil_from_real,
)
from hyperelliptic_census.core.models import WeilPoly


def test_two_rank_and_pattern():
    assert two_rank(WeilPoly(2, (0, 0, -2))) == 0
    assert two_rank(WeilPoly(2, (1, 1, 0))) == 2
    w = WeilPoly(2, (1, 0, 1))
    assert two_rank(w) == 3 and is_ordinary(w)
    assert not is_ordinary(WeilPoly(2, (1, 1, 0)))
    assert str(residue_pattern(WeilPoly(4, (3, -2, 5)))) == "101"


def test_expand_coeffs():
    assert expand_coeffs(WeilPoly(2, (1, 3))) == [1, 1, 3, 2, 4]


def test_real_weil_poly_genus2():
    for q in (2, 4, 8):
        for a1, a2 in product(range(-4, 5), repeat=2):
            assert real_weil_poly(WeilPoly(q, (a1, a2))) == [1, a1, a2 - 2 * q]


def test_weil_from_real_inverts():
    for q in (2, 4):
        for a in product(range(-3, 4), repeat=3):
            w = WeilPoly(q, a)
            assert weil_from_real(real_weil_poly(w), q) == w


def test_elliptic_bounds():
    """Genus 1: valid exactly when a^2 <= 4q."""
    for a in range(-6, 7):
        assert is_weil_poly(WeilPoly(2, (a,))) == (a * a <= 8), f"a={a}"
        assert is_weil_poly(WeilPoly(4, (a,))) == (a * a <= 16), f"a={a}"


def test_curve_weil_poly_is_valid():
    assert is_weil_poly(WeilPoly(2, (0, 0, -2)))
    assert not is_weil_poly(WeilPoly(2, (0, 0, 9)))


def test_count_real_roots():
    assert count_real_roots([1, 0, -2]) == 2
    assert count_real_roots([1, 0, -2], 0, 2) == 1
    assert count_real_roots([1, 0, -1], -1, 1) == 2, "roots on the ends count"
    assert count_real_roots([1, 0, 1]) == 0
    assert count_real_roots([1, -2, 1]) == 1, "repeated roots count once"
    assert count_real_roots([5]) == 0


@pytest.mark.parametrize("h,expected", [
    ([1, 0, -2], True),
    ([1, 0, -8], True),   # roots exactly at +-2 sqrt(2)
    ([1, 0, -9], False),
    ([1, 3, 2], True),
    ([1, 0, 1], False),
    ([1, -4, 4], True),   # double root at 2
])
def test_real_roots_in_interval(h, expected):
    assert real_roots_in_interval(h, 2) is expected


@pytest.mark.parametrize("h", [[1, 0, -2], [1, 0, -9], [1, 3, 2], [1, 0, 1], [1, -1, -7, 3],
                               [1, 0, -6, 2], [1, 2, -5, -7]])
def test_real_roots_agree_with_sympy(h):
    x = sympy.Symbol("x")
    q = 2
    roots = sympy.Poly(h, x).all_roots()
    inside = all(r.is_real and abs(float(r.evalf())) <= 2 * 2 ** 0.5 + 1e-12 for r in roots)
    assert real_roots_in_interval(h, q) == inside


def test_w3_region_matches_weil_test():
    q = 2
    for s, t, u in product(range(-4, 5), range(-8, 9), range(-12, 13)):
        assert in_w3_region(s, t, u, q) == is_weil_poly(WeilPoly(q, (s, t, u))), (s, t, u)


def _region_slab(s, t, q, u_max):
    return [u for u in range(-u_max, u_max + 1) if in_w3_region(s, t, u, q)]


@pytest.mark.parametrize("q", [2, pytest.param(4, marks=pytest.mark.slow),
                               pytest.param(8, marks=pytest.mark.slow)])
def test_w3_region_is_exactly_the_weil_region(q):
    """
    Every (s, t, u) in the coefficient box, slab by slab in u.

    For fixed s, t the real polynomial is x^3 + s x^2 + (t - 3q) x + (u - 2qs),
    so u only shifts it vertically and both sets of valid u are intervals.
    A slab whose derivative has a root outside [-2 sqrt q, 2 sqrt q] holds no
    Weil polynomial at all.
    """
    s_max, t_max, u_max = isqrt(36 * q), 15 * q, isqrt(400 * q ** 3)
    for s, t in product(range(-s_max, s_max + 1), range(-t_max, t_max + 1)):
        slab = _region_slab(s, t, q, u_max)
        if not real_roots_in_interval([3, 2 * s, t - 3 * q], q):
            assert slab == [], (s, t)
            continue
        if not slab:
            for u in range(-u_max, u_max + 1):
                assert not is_weil_poly(WeilPoly(q, (s, t, u))), (s, t, u)
            continue
        lo, hi = slab[0], slab[-1]
        assert slab == list(range(lo, hi + 1)), (s, t)
        assert is_weil_poly(WeilPoly(q, (s, t, lo))) and is_weil_poly(WeilPoly(q, (s, t, hi))), (s, t)
        assert not is_weil_poly(WeilPoly(q, (s, t, lo - 1))), (s, t, lo - 1)
        assert not is_weil_poly(WeilPoly(q, (s, t, hi + 1))), (s, t, hi + 1)
