"""
Verification of census files against the arithmetic invariants.
"""

import logging
from typing import Any, Dict, List, Optional

import jsonschema

from ..algebra.polyring import Poly, pack
from ..arithmetic.weil import is_weil_poly, residue_pattern, two_rank
from ..arithmetic.zeta import count_fibres, weil_from_counts, weierstrass_orbit_sizes
from ..core.census import curve_of, is_hyperelliptic
from ..core.errors import CensusError
from ..core.models import CountVector, CurveRecord, WeilPoly
from ..core.streaming import read_rows
from ..obstructions.obstruct import CONJECTURED, generate_obstructions, weierstrass_count

logger = logging.getLogger(__name__)

_INT_LIST = {"anyOf": [{"type": "null"}, {"type": "array", "items": {"type": "integer"}}]}
_COEFFS = {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}}

CURVE_ROW_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["genus", "n", "q", "field_poly", "v", "u"],
    "properties": {
        "genus": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1, "maximum": 18},
        "q": {"type": "integer", "minimum": 2},
        "field_poly": {"type": "integer", "minimum": 3},
        "v": _COEFFS,
        "u": _COEFFS,
        "counts": _INT_LIST,
        "weil": _INT_LIST,
        "two_rank": {"anyOf": [{"type": "null"}, {"type": "integer", "minimum": 0}]},
    },
}

CHECKS = [
    "schema",
    "hyperelliptic",
    "stored_counts",
    "weil_valid",
    "parity_law",
    "weierstrass_congruence",
    "deuring_shafarevich",
    "orbit_partition",
    "obstruction_soundness",
    "sorted",
]


class CensusValidator:
    """Recomputes counts for each census row and checks every invariant."""

    def __init__(self, max_ext: Optional[int] = None, higher_power: bool = True):
        self.max_ext = max_ext
        self.higher_power = higher_power
        self._obstructed: Dict[int, set] = {}

    def validate_file(self, path: str) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "summary": {
                "file": str(path),
                "total_records": 0,
                "valid_records": 0,
                "invalid_records": 0,
                "conjecture_evidence": {},
            },
            "checks": {name: 0 for name in CHECKS},
            "errors": [],
        }
        rows = read_rows(path)
        previous = None
        for line_num, row in enumerate(rows, 1):
            report["summary"]["total_records"] += 1
            failures = self._validate_row(row, report)
            key = self._sort_key(row)
            if previous is not None and key is not None and key < previous:
                failures.append("sorted")
            previous = key if key is not None else previous
            for name in failures:
                report["checks"][name] += 1
                report["errors"].append({"line": line_num, "check": name})
            if failures:
                report["summary"]["invalid_records"] += 1
            else:
                report["summary"]["valid_records"] += 1
        logger.info("verified %s: %s", path, report["summary"])
        return report

    @staticmethod
    def _sort_key(row: Dict[str, Any]):
        try:
            c = curve_of(CurveRecord.from_row(row))
        except CensusError:
            return None
        return pack(c.v), pack(c.u)

    def _validate_row(self, row: Dict[str, Any], report: Dict[str, Any]) -> List[str]:
        failures: List[str] = []
        try:
            record = CurveRecord.from_row(row)
            jsonschema.validate(record.to_row(), CURVE_ROW_SCHEMA)
            curve = curve_of(record)
        except (CensusError, jsonschema.ValidationError) as e:
            logger.debug("schema failure: %s", e)
            return ["schema"]

        g = record.genus
        if not is_hyperelliptic(curve.v, curve.u, g):
            failures.append("hyperelliptic")
        K = self.max_ext or (len(record.counts) if record.counts else g)
        fibres = [count_fibres(curve, k) for k in range(1, K + 1)]
        counts = [N for N, _ in fibres]
        stored = (record.counts or [])[:K]
        if stored and stored != counts[:len(stored)]:
            failures.append("stored_counts")

        w = weil_from_counts(CountVector(record.q, tuple(counts)), g) if K >= g else None
        if w is not None:
            if not is_weil_poly(w) or (record.weil and list(w.a) != record.weil):
                failures.append("weil_valid")
            failures.extend(self._check_parity(w, counts, fibres, curve, report))
        return failures

    def _check_parity(self, w: WeilPoly, counts: List[int], fibres, curve, report) -> List[str]:
        failures = []
        g = w.genus
        r = two_rank(w)
        for k, (N, W) in enumerate(fibres, start=1):
            if (N + W) % 2:
                failures.append("parity_law")
                break
        for k, (N, W) in enumerate(fibres, start=1):
            modulus = 2 * (k & -k)
            if (N - (2 - W)) % modulus:
                failures.append("weierstrass_congruence")
                break
        orbit_sizes = weierstrass_orbit_sizes(curve)
        if sum(orbit_sizes) != r + 1:
            failures.append("deuring_shafarevich")
        if any(weierstrass_count(orbit_sizes, k) != W for k, (_, W) in enumerate(fibres, start=1)):
            failures.append("orbit_partition")
        pattern = residue_pattern(w)
        if pattern.bits in self._obstructed_set(g):
            failures.append("obstruction_soundness")
        evidence = report["summary"]["conjecture_evidence"]
        if g in CONJECTURED and pattern == CONJECTURED[g]:
            evidence[str(pattern)] = evidence.get(str(pattern), 0) + 1
        return failures

    def _obstructed_set(self, g: int) -> set:
        if g not in self._obstructed:
            self._obstructed[g] = {p.bits for p in
                                   generate_obstructions(g, higher_power=self.higher_power)}
        return self._obstructed[g]


def validate_curve(v: Poly, u: Poly, g: int) -> bool:
    return is_hyperelliptic(v, u, g)
