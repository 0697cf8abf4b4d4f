"""
Conway polynomials over GF(2), degrees 1..18.

Each entry is the polynomial packed as an integer: bit i is the coefficient
of x^i. The table is compatible in the Conway sense, so the norm-compatible
embeddings between subfields are fixed by the generators alone.
"""

from typing import Dict

CONWAY_POLYNOMIALS: Dict[int, int] = {
    1: 0b11,                    # x + 1
    2: 0b111,                   # x^2 + x + 1
    3: 0b1011,                  # x^3 + x + 1
    4: 0b10011,                 # x^4 + x + 1
    5: 0b100101,                # x^5 + x^2 + 1
    6: 0b1011011,               # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,              # x^7 + x + 1
    8: 0b100011101,             # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,            # x^9 + x^4 + 1
    10: 0b10001101111,          # x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    11: 0b100000000101,         # x^11 + x^2 + 1
    12: 0b1000011101011,        # x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    13: 0b10000000011011,       # x^13 + x^4 + x^3 + x + 1
    14: 0b100000010101001,      # x^14 + x^7 + x^5 + x^3 + 1
    15: 0b1000000000110101,     # x^15 + x^5 + x^4 + x^2 + 1
    16: 0b10000000000101101,    # x^16 + x^5 + x^3 + x^2 + 1
    17: 0b100000000000001001,   # x^17 + x^3 + 1
    18: 0b1000001010000000011,  # x^18 + x^12 + x^10 + x + 1
}

MAX_CONWAY_DEGREE = max(CONWAY_POLYNOMIALS)


def conway_polynomial(n: int) -> int:
    """Return the packed Conway polynomial of degree n."""
    try:
        return CONWAY_POLYNOMIALS[n]
    except KeyError:
        from ..core.errors import PreconditionError
        raise PreconditionError(
            f"no Conway polynomial for degree {n} (table covers 1..{MAX_CONWAY_DEGREE})"
        ) from None
