"""Multiplicative arithmetic functions on F_p[T].

Each function accepts a :class:`Poly` (factored on the fly) or an existing
:class:`Factorization`.  The ``*_from_pattern`` forms take the sorted
``(degree, exponent)`` pattern and the field size, which is all the
functions depend on.
"""

from __future__ import annotations

from math import comb, prod

from .factor import Factorization, factor
from .poly import Poly, _gcd, monic_from_index

Pattern = tuple[tuple[int, int], ...]


def _fac(f) -> Factorization:
    if isinstance(f, Factorization):
        return f
    if f.degree < 1:
        raise ValueError("arithmetic functions need a polynomial of degree >= 1")
    return factor(f)


def omega(f) -> int:
    """Number of distinct monic irreducible factors."""
    return len(_fac(f).factors)


def big_omega(f) -> int:
    """Number of irreducible factors counted with multiplicity."""
    return sum(e for _, e in _fac(f).factors)


def d_k(f, k: int) -> int:
    """Number of ordered ``k``-tuples of monic polynomials with product ``monic(f)``."""
    fac = _fac(f)
    return dk_from_pattern(fac.degree_pattern(), k)


def phi(f) -> int:
    """Polynomial totient ``#(F_p[T]/(f))^*``."""
    fac = _fac(f)
    return phi_from_pattern(fac.degree_pattern(), fac.p)


def sigma(f) -> int:
    """Sum of norms ``|d| = p^deg d`` over the monic divisors ``d`` of ``f``."""
    fac = _fac(f)
    return sigma_from_pattern(fac.degree_pattern(), fac.p)


def dk_from_pattern(pattern: Pattern, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return prod(comb(e + k - 1, k - 1) for _, e in pattern)


def phi_from_pattern(pattern: Pattern, q: int) -> int:
    return prod(q ** (e * d) - q ** ((e - 1) * d) for d, e in pattern)


def sigma_from_pattern(pattern: Pattern, q: int) -> int:
    out = 1
    for d, e in pattern:
        norm = q**d
        out *= (norm ** (e + 1) - 1) // (norm - 1)
    return out


def phi_by_enumeration(f: Poly) -> int:
    """Count residues ``g`` with ``deg g < deg f`` and ``gcd(g, f) = 1`` directly."""
    n, p = f.degree, f.p
    if n < 1:
        raise ValueError("phi needs a polynomial of degree >= 1")
    count = 0
    for idx in range(p**n):
        g = list(monic_from_index(p, n, idx).coeffs[:-1])
        while g and g[-1] == 0:
            g.pop()
        if g and len(_gcd(f.coeffs, g, p)) == 1:
            count += 1
    return count


def sigma_by_enumeration(f: Poly) -> int:
    """Sum ``p^deg d`` over monic ``d`` of degree ``<= deg f`` dividing ``f``."""
    n, p = f.degree, f.p
    total = 0
    for m in range(n + 1):
        for idx in range(p**m):
            d = monic_from_index(p, m, idx)
            if (f % d).is_zero():
                total += p**m
    return total
