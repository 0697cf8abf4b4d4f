"""
Census-file verification and brute-force reference implementations.
"""

from .validators import CensusValidator
