from fractions import Fraction

import numpy as np
import pytest
import sympy

from hyperelliptic_census.analysis.stats import (
    OBSTRUCTED_W3,
    _parity_split,
    class_table_frame,
    deviation_from_uniform,
    isogeny_count_estimate,
    iter_weil_polys,
    pattern_counts_frame,
    scan_class_table,
    tau3,
    tau4,
    tau_from_table,
    w3_class_counts,
    w3_summary,
    weil_scan,
)
from hyperelliptic_census.arithmetic.weil import is_weil_poly
from hyperelliptic_census.core.models import ClassCountTable
from hyperelliptic_census.obstructions.obstruct import generate_obstructions


def test_parity_split():
    lo = np.array([0, 1, 3, 5])
    hi = np.array([3, 1, 2, 8])
    evens, odds = _parity_split(lo, hi)
    assert evens.tolist() == [2, 0, 0, 2]
    assert odds.tolist() == [2, 1, 0, 2]


def test_lattice_count_matches_scan():
    assert w3_class_counts(2).counts == scan_class_table(2).counts


@pytest.mark.slow
def test_lattice_count_matches_scan_q4():
    assert w3_class_counts(4).counts == scan_class_table(4).counts


def test_parallel_lattice_count():
    assert w3_class_counts(16, jobs=2).counts == w3_class_counts(16).counts


def test_scan_yields_weil_polys():
    found = list(iter_weil_polys(2, 2))
    assert found and all(is_weil_poly(w) for w in found)
    assert len(set(found)) == len(found)


def test_genus1_scan():
    """Elliptic: |a| <= 2 sqrt(q)."""
    counts = weil_scan(1, 4)
    assert counts == {(0,): 5, (1,): 4}


def test_tau_from_table():
    counts = {(a, b, c): 1 for a in (0, 1) for b in (0, 1) for c in (0, 1)}
    ordinary, total = tau_from_table(ClassCountTable(2, counts))
    assert ordinary == Fraction(1, 2) and total == Fraction(1, 4)
    assert set(OBSTRUCTED_W3) == {p.bits for p in generate_obstructions(3)}


def test_frames():
    table = w3_class_counts(4)
    frame = class_table_frame([table])
    assert len(frame) == 8
    assert frame["count"].sum() == table.total
    assert abs(frame["proportion"].sum() - 1.0) < 1e-9
    assert frame[frame["obstructed"]]["class"].tolist() == ["011", "101"]
    summary = w3_summary([2], with_tau=True)
    assert len(summary) == 1, "one row per q"
    row = summary.iloc[0]
    assert row["q"] == 4 and row["method"] == "lattice"
    assert [row[c] for c in ("000", "011", "101", "111")] == [table.counts[(0, 0, 0)], table.counts[(0, 1, 1)],
                                                             table.counts[(1, 0, 1)], table.counts[(1, 1, 1)]]
    assert row["total"] == table.total and row["ordinary"] == table.ordinary()
    assert row["obstructed"] == table.counts[(0, 1, 1)] + table.counts[(1, 0, 1)]
    assert abs(row["tau_ordinary"] - float(tau_from_table(table)[0])) < 1e-12
    pc = pattern_counts_frame({(0,): 3, (1,): 1}, 2)
    assert pc["pattern"].tolist() == ["0", "1"]


def test_isogeny_estimate():
    assert sympy.simplify(isogeny_count_estimate(1, 2) - 2 * sympy.sqrt(2)) == 0


@pytest.mark.slow
def test_tau4_consistency():
    q = 2
    counts = weil_scan(4, q)
    obstructed = {p.bits for p in generate_obstructions(4, higher_power=True)}
    ordinary, total = tau4(q)
    assert 0 <= total <= ordinary
    assert total == Fraction(sum(counts[b] for b in obstructed), sum(counts.values()))


@pytest.mark.slow
def test_equidistribution_and_tau3():
    large = w3_class_counts(1 << 16, jobs=4)
    small = w3_class_counts(1 << 8)
    for cls in large.counts:
        assert abs(large.proportion(cls) - 1 / 8) < 0.02, cls
    assert deviation_from_uniform(large) < deviation_from_uniform(small)
    ordinary, _ = tau_from_table(large)
    assert abs(float(ordinary) - 0.5) < 0.02
    assert abs(float(tau3(1 << 8)[0]) - 0.5) > abs(float(ordinary) - 0.5)


def test_w3_summary_methods_agree():
    lattice = w3_summary([1, 2])
    assert lattice["q"].tolist() == [2, 4]
    scan = w3_summary([1], method="scan")
    assert scan.iloc[0]["method"] == "scan"
    columns = ["000", "001", "010", "011", "100", "101", "110", "111", "total", "obstructed", "ordinary"]
    assert scan[columns].iloc[0].tolist() == lattice[columns].iloc[0].tolist()
    with pytest.raises(ValueError):
        w3_summary([1], method="guess")
