"""Class statistics of Weil polynomials."""
