#!/usr/bin/env python3
"""
Smoke tests for the Hyperelliptic Curve Census.
"""

import sys
from pathlib import Path

# Add the current directory to Python path
sys.path.insert(0, str(Path(__file__).parent))

from hyperelliptic_census.algebra.gf2n import field
from hyperelliptic_census.algebra.polyring import poly
from hyperelliptic_census.arithmetic.zeta import count_vector, weil_from_counts
from hyperelliptic_census.arithmetic.weil import is_weil_poly, two_rank
from hyperelliptic_census.core.census import enumerate_genus
from hyperelliptic_census.core.models import Curve
from hyperelliptic_census.obstructions.obstruct import generate_obstructions


def test_point_counts():
    """Test point counting on y^2 + y = x^7 over GF(2)."""
    print("🧪 Testing point counts...")

    F = field(1)
    curve = Curve(poly([1], F), poly([0, 0, 0, 0, 0, 0, 0, 1], F), 3)
    cv = count_vector(curve, 4)

    assert cv.counts == (3, 5, 3, 17), f"Unexpected counts {cv.counts}"

    w = weil_from_counts(cv, 3)
    assert w.a == (0, 0, -2), f"Unexpected Weil coefficients {w.a}"
    assert is_weil_poly(w), "Weil polynomial rejected"
    assert two_rank(w) == 0, "Curve should be supersingular"

    print(f"✅ N = {list(cv.counts)}, a = {list(w.a)}")
    return True


def test_small_census():
    """Test that a small census produces sorted, counted classes."""
    print("🧪 Testing small census...")

    records = enumerate_genus(2, field(1), jobs=1, with_counts=2)

    assert len(records) > 0, "No classes enumerated"
    assert all(r.genus == 2 for r in records), "Wrong genus in records"
    assert all(r.weil is not None for r in records), "Weil data missing"

    print(f"✅ Enumerated {len(records)} classes")
    return True


def test_obstructions():
    """Test the genus-3 obstruction list."""
    print("🧪 Testing obstructions...")

    patterns = sorted(str(p) for p in generate_obstructions(3))

    assert patterns == ["011", "101"], f"Unexpected obstructions {patterns}"

    print(f"✅ Obstructed patterns: {', '.join(patterns)}")
    return True


def run_all_tests():
    """Run all smoke tests."""
    print("🚀 Running Smoke Tests for Hyperelliptic Curve Census")
    print("=" * 50)

    tests = [
        test_point_counts,
        test_small_census,
        test_obstructions,
    ]

    passed = 0
    failed = 0

    for test in tests:
        try:
            if test():
                passed += 1
            else:
                failed += 1
                print(f"❌ {test.__name__} failed")
        except Exception as e:
            failed += 1
            print(f"❌ {test.__name__} failed with error: {e}")

    print(f"\n📊 Test Results: {passed} passed, {failed} failed")

    if failed == 0:
        print("✅ All tests passed!")
        return True
    else:
        print("❌ Some tests failed!")
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
