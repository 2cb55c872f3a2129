"""Cycle-type structure polynomials and their separation thresholds.

For a squarefree ``f`` of degree ``n`` with cycle type ``lam``::

    phi(f)   = q^n * prod_j (1 - q^-j)^lam_j
    sigma(f) = q^n * prod_j (1 + q^-j)^lam_j

so ``phi`` (or ``sigma``) separates cycle types at ``q`` exactly when the
integer polynomials ``prod (1 -+ z^j)^lam_j`` take distinct values at ``1/q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from sympy import primerange

from ..partitions import Partition, enumerate_partitions


class DistinctnessError(RuntimeError):
    """Two different cycle types produced the same structure polynomial."""


@dataclass(frozen=True)
class StructurePoly:
    """Integer polynomial in ``z``, little-endian, constant term 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("structure polynomials have constant term 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def scaled_at_inverse(self, q: int, n: int) -> int:
        """``q^n * P(1/q)`` as an exact integer (needs ``degree <= n``)."""
        return sum(c * q ** (n - i) for i, c in enumerate(self.coeffs))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _structure(lam: Partition, sign: int) -> StructurePoly:
    acc = [1]
    for j, m in enumerate(lam.mult, 1):
        base = [1] + [0] * (j - 1) + [sign]
        for _ in range(m):
            acc = _poly_mul(acc, base)
    return StructurePoly(tuple(_trim(acc)))


def phi_structure(lam: Partition) -> StructurePoly:
    """``prod_j (1 - z^j)^lam_j``."""
    return _structure(lam, -1)


def sigma_structure(lam: Partition) -> StructurePoly:
    """``prod_j (1 + z^j)^lam_j``."""
    return _structure(lam, +1)


STRUCTURES = {"phi": phi_structure, "sigma": sigma_structure}


def multiplicities_from_structure(P: StructurePoly, n: int, which: str = "phi") -> Partition:
    """Recover ``lam`` from its structure polynomial through the log-derivative.

    For ``phi``, ``-z P'/P = sum_m s_m z^m`` with ``s_m = sum_{j | m} j lam_j``,
    so ``lam_m = (s_m - sum_{j | m, j < m} j lam_j) / m``.  For ``sigma`` the
    divisor sums carry the sign ``(-1)^(m/j - 1)``.
    """
    if which not in STRUCTURES:
        raise ValueError(f"which must be 'phi' or 'sigma', got {which!r}")
    a = [Fraction(c) for c in P.coeffs] + [Fraction(0)] * (n + 1 - len(P.coeffs))
    # b = log P, via n b_n = n a_n - sum_{k<n} k b_k a_{n-k}
    b = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = m * a[m]
        for k in range(1, m):
            acc -= k * b[k] * a[m - k]
        b[m] = acc / m
    # z (log P)' has coefficients m b_m
    sign = -1 if which == "phi" else 1
    mult = [0] * n
    for m in range(1, n + 1):
        s_m = sign * m * b[m]
        for j in range(1, m):
            if m % j == 0 and mult[j - 1]:
                t = j * mult[j - 1]
                if which == "sigma" and (m // j) % 2 == 0:
                    t = -t
                s_m -= t
        lam_m = s_m / m
        if lam_m.denominator != 1 or lam_m < 0:
            raise ValueError("polynomial is not a structure polynomial of a partition of n")
        mult[m - 1] = int(lam_m)
    return Partition(n, tuple(mult))


@dataclass(frozen=True)
class DistinctnessCertificate:
    n: int
    which: str
    q_threshold: int
    colliding_pairs: tuple[tuple[int, Partition, Partition], ...] = field(default=())
    pairs_checked: int = 0

    def certifies(self, q: int) -> bool:
        """True when every pair of cycle types is separated at this ``q``."""
        return q > self.q_threshold


def root_modulus_lower_bound(G: list[int]) -> float:
    """Cauchy-type bound: every root of ``G`` (with ``G[0] != 0``) has modulus above this.

    ``rho = |g_0| / (|g_0| + max_{i>=1} |g_i|)``; a constant ``G`` has no roots.
    """
    g0 = abs(G[0])
    if g0 == 0:
        raise ValueError("constant term must be nonzero")
    rest = max((abs(c) for c in G[1:]), default=0)
    return math.inf if rest == 0 else g0 / (g0 + rest)


def _threshold_from(G: list[int]) -> int:
    # 1/rho = 1 + max|g_i| / |g_0|, rounded up in integers
    g0 = abs(G[0])
    rest = max((abs(c) for c in G[1:]), default=0)
    if rest == 0:
        return 1
    return 1 + -(-rest // g0)


def distinctness_certificate(n: int, which: str = "phi") -> DistinctnessCertificate:
    """Certify that the structure polynomials separate all cycle types of ``n``.

    Checks pairwise distinctness exactly (raising :class:`DistinctnessError`
    otherwise), then for each difference ``z^m G(z)`` bounds the nonzero roots
    away from 0.  No root of modulus below ``1/q_threshold`` exists, so every
    prime above ``q_threshold`` is collision-free.  Primes up to the threshold
    are scanned and actual collisions recorded.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if which not in STRUCTURES:
        raise ValueError(f"which must be 'phi' or 'sigma', got {which!r}")
    make = STRUCTURES[which]
    lams = list(enumerate_partitions(n))
    polys = [make(lam).coeffs + (0,) * (n + 1 - len(make(lam).coeffs)) for lam in lams]
    diffs = []
    threshold = 1
    for (i, a), (j, b) in combinations(enumerate(polys), 2):
        d = [x - y for x, y in zip(a, b)]
        if not any(d):
            raise DistinctnessError(f"{lams[i]} and {lams[j]} share the {which} structure polynomial")
        G = _trim(d[next(k for k, c in enumerate(d) if c):])
        diffs.append((i, j, G))
        threshold = max(threshold, _threshold_from(G))
    collisions = []
    for q in primerange(2, threshold + 1):
        q = int(q)
        for i, j, G in diffs:
            deg = len(G) - 1
            if sum(c * q ** (deg - k) for k, c in enumerate(G)) == 0:
                collisions.append((q, lams[i], lams[j]))
    return DistinctnessCertificate(n, which, threshold, tuple(collisions), len(diffs))
