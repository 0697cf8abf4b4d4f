"""Point counts, zeta data and Weil polynomials."""
