"""
Hyperelliptic Curve Census

Enumerates isomorphism classes of hyperelliptic curves over GF(2^n), computes
their zeta data and derives coefficient-parity obstructions for Weil
polynomials of hyperelliptic Jacobians.
"""

__version__ = "1.0.0"

from .core.census import enumerate_genus, is_hyperelliptic
from .core.streaming import CensusStreamer
from .arithmetic.zeta import count_points, counts_from_weil, weil_from_counts
from .arithmetic.weil import is_weil_poly, two_rank
from .obstructions.obstruct import generate_obstructions, pattern_is_obstruction

__all__ = [
    "enumerate_genus",
    "is_hyperelliptic",
    "CensusStreamer",
    "count_points",
    "counts_from_weil",
    "weil_from_counts",
    "is_weil_poly",
    "two_rank",
    "generate_obstructions",
    "pattern_is_obstruction",
]
