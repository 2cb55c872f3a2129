"""Exact coincidence statistics of permutation cycle structure, with
exhaustive checks over polynomials in F_q[T]."""

__version__ = "0.1.0"
