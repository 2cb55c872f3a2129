"""Factorization over F_p.

:func:`factor` runs square-free splitting, distinct-degree splitting and
Cantor-Zassenhaus equal-degree splitting.  :func:`factor_trial_division` is
a slow, independent route kept as the test oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from ..partitions import Partition
from .poly import Poly, _add, _derivative, _divmod, _gcd, _mod, _monic, _mulmod, _powmod, _sub

DEFAULT_SEED = 0


@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple[tuple[Poly, int], ...]
    p: int

    def product(self) -> Poly:
        out = Poly.constant(self.p, self.unit)
        for P, e in self.factors:
            out = out * P**e
        return out

    def degree_pattern(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(degree, exponent)`` pairs; all arithmetic functions depend only on this."""
        return tuple(sorted((P.degree, e) for P, e in self.factors))

    def __str__(self):
        parts = [f"({P})" + (f"^{e}" if e > 1 else "") for P, e in self.factors]
        unit = [] if self.unit == 1 and parts else [str(self.unit)]
        return " * ".join(unit + parts)


def _sort_key(item):
    P, e = item
    return (P.degree, P.coeffs, e)


def _finish(unit, pairs, p):
    merged: dict[tuple[int, ...], int] = {}
    for f, e in pairs:
        merged[tuple(f)] = merged.get(tuple(f), 0) + e
    factors = sorted(((Poly._raw(p, c), e) for c, e in merged.items()), key=_sort_key)
    return Factorization(unit, tuple(factors), p)


def _pth_root(f, p):
    # f' = 0, so only exponents divisible by p occur and x -> x^(1/p) is the identity on F_p
    return f[::p]


def squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic square-free ``(g_i, i)`` with ``f = prod g_i^i`` for monic ``f``."""
    out = []
    fprime = _derivative(f, p)
    if not fprime:
        for g, e in squarefree_decomposition(_pth_root(f, p), p):
            out.append((g, e * p))
        return out
    c = _gcd(f, fprime, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        fac = _divmod(w, y, p)[0]
        if len(fac) > 1:
            out.append((fac, i))
        w = y
        c = _divmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        for g, e in squarefree_decomposition(_pth_root(c, p), p):
            out.append((g, e * p))
    return out


def distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a monic square-free ``f`` into ``(g_d, d)``; ``g_d`` is the product of its degree-``d`` factors."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _random_poly(deg_bound, p, rng):
    a = [rng.randrange(p) for _ in range(deg_bound)]
    while a and a[-1] == 0:
        a.pop()
    return a


def equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus: all degree-``d`` irreducible factors of ``f``."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _random_poly(n, p, rng)
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            b, t = list(a), list(a)
            for _ in range(d - 1):
                t = _mulmod(t, t, f, 2)
                b = _add(b, t, 2)
        else:
            b = _sub(_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gcd(f, b, p)
        if 1 < len(g) < len(f):
            h = _divmod(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def factor(f: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Factor ``f`` (degree >= 1) into monic irreducibles.

    Output is sorted by degree, then coefficient tuple.  ``seed`` drives the
    equal-degree splitting, so results are reproducible.
    """
    if f.degree < 1:
        raise ValueError("factor needs a polynomial of degree >= 1")
    p = f.p
    rng = random.Random(seed)
    unit = f.lead
    pairs = []
    for g, e in squarefree_decomposition(_monic(list(f.coeffs), p), p):
        for h, d in distinct_degree(g, p):
            for P in equal_degree(h, d, p, rng):
                pairs.append((P, e))
    return _finish(unit, pairs, p)


def _monic_of_degree(p, d):
    for idx in range(p**d):
        lower = []
        for _ in range(d):
            idx, c = divmod(idx, p)
            lower.append(c)
        yield lower + [1]


@lru_cache(maxsize=None)
def _trial_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    # a degree-d candidate is kept iff no kept candidate of degree <= d/2 divides it
    smaller = [c for e in range(1, d // 2 + 1) for c in _trial_irreducibles(p, e)]
    return tuple(tuple(cand) for cand in _monic_of_degree(p, d)
                 if all(_divmod(cand, list(s), p)[1] for s in smaller))


def factor_trial_division(f: Poly) -> Factorization:
    """Factor by dividing out monic irreducible candidates of degree 1, 2, ... in turn.

    The candidate lists are themselves built by trial division.  Exponential
    in the degree; only meant as an independent check on :func:`factor`.
    """
    if f.degree < 1:
        raise ValueError("factor needs a polynomial of degree >= 1")
    p = f.p
    unit = f.lead
    rest = _monic(list(f.coeffs), p)
    pairs = []
    d = 1
    while 2 * d <= len(rest) - 1:
        for cand in _trial_irreducibles(p, d):
            e = 0
            while len(rest) - 1 >= d:
                q, r = _divmod(rest, cand, p)
                if r:
                    break
                rest, e = q, e + 1
            if e:
                pairs.append((list(cand), e))
            if 2 * d > len(rest) - 1:
                break
        d += 1
    if len(rest) > 1:
        pairs.append((rest, 1))
    return _finish(unit, pairs, p)


def is_squarefree(f: Poly) -> bool:
    """True iff no irreducible factor repeats; ``f' = 0`` means ``f`` is a p-th power."""
    if f.degree < 1:
        raise ValueError("is_squarefree needs a non-constant polynomial")
    fp = _derivative(f.coeffs, f.p)
    if not fp:
        return False
    return len(_gcd(f.coeffs, fp, f.p)) == 1


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def cycle_type(f: Poly):
    """Partition of ``deg f`` counting irreducible factors by degree, with multiplicity."""
    mult = [0] * f.degree
    for P, e in factor(f).factors:
        mult[P.degree - 1] += e
    return Partition(f.degree, tuple(mult))

