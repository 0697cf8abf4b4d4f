"""Finite fields of characteristic 2, polynomials over them and the PGL2 action."""
