"""
Benchmarking for the census enumerator.
"""

from .performance import PerformanceBenchmark
