"""
Performance benchmarking for the census enumerator.
"""

import logging
import time
from typing import Any, Dict, List, Optional

import psutil

from ..algebra.gf2n import field
from ..core.census import check_enumerable, enumerate_genus
from ..core.errors import PreconditionError

logger = logging.getLogger(__name__)

NOMINAL_BAND = (16.0, 64.0)
HARD_BAND = (8.0, 128.0)


class PerformanceBenchmark:
    """Times enumerate_genus over a sequence of field degrees."""

    def __init__(self, jobs: int = 1):
        self.jobs = jobs
        self.results: Dict[str, Any] = {}

    def run_benchmarks(self, genus: int, degrees: List[int], iterations: int = 3) -> Dict[str, Any]:
        """Average time, memory and class counts per degree, plus growth ratios."""
        results: Dict[str, Any] = {"genus": genus, "degrees": {}, "growth": []}

        for n in degrees:
            try:
                check_enumerable(genus, field(n))
            except PreconditionError as e:
                logger.warning("skipping n=%d: %s", n, e)
                results["degrees"][str(n)] = {"skipped": str(e)}
                continue
            logger.info("benchmarking g=%d n=%d", genus, n)
            runs = [self._benchmark_single_run(genus, n) for _ in range(iterations)]
            results["degrees"][str(n)] = self._calculate_averages(runs)

        results["growth"] = self.growth_ratios(results["degrees"])
        self.results = results
        return results

    def _benchmark_single_run(self, genus: int, n: int) -> Dict[str, Any]:
        F = field(n)
        initial_memory = psutil.Process().memory_info().rss / 1024 / 1024  # MB
        start_time = time.time()

        records = enumerate_genus(genus, F, jobs=self.jobs)

        elapsed = time.time() - start_time
        final_memory = psutil.Process().memory_info().rss / 1024 / 1024

        return {
            "time": elapsed,
            "memory": final_memory - initial_memory,
            "classes": len(records),
            "rate": len(records) / elapsed if elapsed > 0 else 0.0,
        }

    def _calculate_averages(self, results: List[Dict[str, Any]]) -> Dict[str, Any]:
        if not results:
            return {}

        avg_result = {}
        for key in results[0].keys():
            values = [r[key] for r in results]
            avg_result[f"avg_{key}"] = sum(values) / len(values)
            avg_result[f"min_{key}"] = min(values)
            avg_result[f"max_{key}"] = max(values)
        return avg_result

    @staticmethod
    def growth_ratios(per_degree: Dict[str, Dict[str, Any]]) -> List[Dict[str, Any]]:
        """Class-count ratios between consecutive benchmarked degrees."""
        measured = sorted((int(n), r["avg_classes"]) for n, r in per_degree.items()
                          if "avg_classes" in r)
        out = []
        for (n0, c0), (n1, c1) in zip(measured, measured[1:]):
            if n1 != n0 + 1 or not c0:
                continue
            ratio = c1 / c0
            out.append({"from": n0, "to": n1, "ratio": ratio, "status": band_status(ratio)})
        return out


def band_status(ratio: float) -> str:
    """'ok' inside the nominal band, 'warn' inside the hard band, else 'fail'."""
    if NOMINAL_BAND[0] <= ratio <= NOMINAL_BAND[1]:
        return "ok"
    if HARD_BAND[0] <= ratio <= HARD_BAND[1]:
        logger.warning("growth ratio %.2f outside [%g, %g]", ratio, *NOMINAL_BAND)
        return "warn"
    return "fail"


def growth_failed(results: Dict[str, Any]) -> Optional[Dict[str, Any]]:
    for entry in results.get("growth", []):
        if entry["status"] == "fail":
            return entry
    return None
