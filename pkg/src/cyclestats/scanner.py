"""Exhaustive scans of shifted coincidences ``alpha(f + a_1) = ... = alpha(f + a_r)``.

Every monic ``f`` of degree ``n`` over ``F_q`` is visited.  Since each shift
has degree below ``n``, ``f + a_j`` is again monic of degree ``n``, so one
factor table per ``(q, n)`` serves all shifts.

``omega``, ``big_omega`` and ``d_k`` are compared against ``E_r(n)``; ``phi``
and ``sigma`` against ``W_r(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .ffpoly import Poly, factor_table, format_poly, shifted_indices
from .ffpoly.structure import distinctness_certificate
from .ffpoly.table import check_budget
from .partitions import Partition, cauchy_probability, enumerate_partitions
from .permstats import E_r, W_r_partition_sum

OMEGA_CLASS = ("omega", "big_omega", "d_k")
PHI_CLASS = ("phi", "sigma")
ALPHAS = OMEGA_CLASS + PHI_CLASS


@dataclass(frozen=True)
class ShiftSystem:
    q: int
    n: int
    shifts: tuple[Poly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        shifts = tuple(a if isinstance(a, Poly) else Poly.constant(self.q, a) for a in self.shifts)
        object.__setattr__(self, "shifts", shifts)
        if not shifts:
            raise ValueError("a shift system needs at least one shift")
        for a in shifts:
            if a.p != self.q:
                raise ValueError(f"shift {a} is not over F_{self.q}")
            if a.degree >= self.n:
                raise ValueError(f"shift {a} has degree {a.degree} >= n = {self.n}")
        if len(set(shifts)) != len(shifts):
            raise ValueError("shifts must be pairwise distinct")

    @property
    def r(self) -> int:
        return len(self.shifts)

    @classmethod
    def constants(cls, q: int, n: int, r: int) -> "ShiftSystem":
        """The default system ``0, 1, ..., r-1``."""
        if r > q:
            raise ValueError(f"r = {r} constant shifts do not fit in F_{q}")
        return cls(q, n, tuple(Poly.constant(q, c) for c in range(r)))

    def translate(self, c: Poly | int) -> "ShiftSystem":
        """Add the same polynomial ``c`` (degree < n) to every shift."""
        return ShiftSystem(self.q, self.n, tuple(a + c for a in self.shifts))

    def indices(self) -> list[np.ndarray]:
        return [shifted_indices(self.q, self.n, a.coeffs) for a in self.shifts]


@dataclass(frozen=True)
class ScanReport:
    q: int
    n: int
    r: int
    alpha: str
    S: int
    probability: Fraction
    model_value: Fraction
    k: int | None = None
    shifts: tuple[str, ...] = field(default=())

    @property
    def q_pow_n(self) -> int:
        return self.q**self.n

    @property
    def deviation(self) -> float:
        return float(abs(self.probability - self.model_value))

    @property
    def normalized_deviation(self) -> float:
        return self.deviation * math.sqrt(self.q)

    @property
    def alpha_label(self) -> str:
        return f"d_{self.k}" if self.alpha == "d_k" else self.alpha


def model_value(alpha: str, n: int, r: int) -> Fraction:
    if alpha in OMEGA_CLASS:
        return E_r(n, r)
    if alpha in PHI_CLASS:
        return W_r_partition_sum(n, r)
    raise ValueError(f"unknown arithmetic function {alpha!r}; expected one of {ALPHAS}")


def _event(sys: ShiftSystem, alpha: str, k: int | None, allow_large: bool) -> np.ndarray:
    table = factor_table(sys.q, sys.n, allow_large)
    values = table.values(alpha, k)
    idx = sys.indices()
    first = values[idx[0]]
    mask = np.ones(first.shape, dtype=bool)
    for other in idx[1:]:
        mask &= values[other] == first
    return mask


def scan(sys: ShiftSystem, alpha: str, k: int | None = None, allow_large: bool = False) -> ScanReport:
    """Count ``f`` in ``M_n`` with ``alpha(f + a_1) = ... = alpha(f + a_r)`` exactly."""
    if sys.r < 2:
        raise ValueError("scan needs at least two shifts")
    model = model_value(alpha, sys.n, sys.r)
    if alpha == "d_k" and (k is None or k < 2):
        raise ValueError("d_k needs k >= 2")
    S = int(np.count_nonzero(_event(sys, alpha, k, allow_large)))
    return ScanReport(sys.q, sys.n, sys.r, alpha, S, Fraction(S, sys.q**sys.n), model,
                      k if alpha == "d_k" else None, tuple(format_poly(a) for a in sys.shifts))


def squarefree_restricted_count(sys: ShiftSystem, alpha: str, k: int | None = None) -> int:
    """Like :func:`scan`, but only over ``f`` whose shifts are all squarefree."""
    table = factor_table(sys.q, sys.n)
    sqf = np.ones(table.size, dtype=bool)
    for idx in sys.indices():
        sqf &= table.squarefree[idx]
    return int(np.count_nonzero(_event(sys, alpha, k, False) & sqf))


def non_squarefree_tuple_count(sys: ShiftSystem) -> int:
    """Number of ``f`` for which some ``f + a_j`` is not squarefree."""
    table = factor_table(sys.q, sys.n)
    bad = np.zeros(table.size, dtype=bool)
    for idx in sys.indices():
        bad |= ~table.squarefree[idx]
    return int(np.count_nonzero(bad))


def joint_census(sys: ShiftSystem, allow_large: bool = False) -> dict[tuple[Partition, ...], int]:
    """Exact count of ``f`` for every tuple of shifted cycle types that occurs."""
    table = factor_table(sys.q, sys.n, allow_large)
    cols = np.stack([table.cyc[idx] for idx in sys.indices()], axis=1)
    rows, counts = np.unique(cols, axis=0, return_counts=True)
    return {tuple(table.partition(c) for c in row): int(cnt) for row, cnt in zip(rows, counts)}


def census_max_deviation(census: dict[tuple[Partition, ...], int], q: int, n: int) -> float:
    """``max |count/q^n - prod_i p(lam_i)|`` over all tuples of partitions of ``n``."""
    r = len(next(iter(census)))
    lams = list(enumerate_partitions(n))
    probs = {lam: cauchy_probability(lam) for lam in lams}
    total = q**n
    worst = Fraction(0)
    for combo in product(lams, repeat=r):
        expected = math.prod((probs[lam] for lam in combo), start=Fraction(1))
        dev = abs(Fraction(census.get(combo, 0), total) - expected)
        worst = max(worst, dev)
    return float(worst)


def deviation_sweep(n: int, r: int, alpha: str, primes: Iterable[int], k: int | None = None,
                    shifts: Sequence[Sequence[int]] | None = None,
                    allow_large: bool = False) -> list[ScanReport]:
    """One :class:`ScanReport` per prime.

    ``shifts`` are coefficient lists instantiated in each field; by default
    the constants ``0, ..., r-1``.
    """
    primes = list(primes)
    for q in primes:
        check_budget(q, n, allow_large)
    reports = []
    for q in primes:
        if shifts is None:
            sys = ShiftSystem.constants(q, n, r)
        else:
            if len(shifts) != r:
                raise ValueError(f"expected {r} shifts, got {len(shifts)}")
            sys = ShiftSystem(q, n, tuple(Poly(q, tuple(a)) for a in shifts))
        reports.append(scan(sys, alpha, k, allow_large))
    return reports


@dataclass(frozen=True)
class Collision:
    phi_value: int
    first: Partition
    second: Partition


def collision_probe(n: int, q: int, allow_large: bool = False) -> list[Collision]:
    """Squarefree ``f, g`` of degree ``n`` with different cycle types but equal ``phi``.

    ``phi`` of a squarefree polynomial depends only on its cycle type, so
    collisions are reported per pair of cycle types.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    table = factor_table(q, n, allow_large)
    sqf = table.squarefree
    pairs = np.unique(np.stack([table.phi[sqf], table.cyc[sqf]], axis=1), axis=0)
    out = []
    by_phi: dict[int, list[int]] = {}
    for value, code in pairs.tolist():
        by_phi.setdefault(value, []).append(code)
    for value, codes in sorted(by_phi.items()):
        for i in range(len(codes)):
            for j in range(i + 1, len(codes)):
                out.append(Collision(value, table.partition(codes[i]), table.partition(codes[j])))
    return out


def certified_collision_free(n: int, q: int) -> bool:
    """Whether the structure-polynomial certificate rules out ``phi`` collisions at ``q``."""
    return distinctness_certificate(n, "phi").certifies(q)
