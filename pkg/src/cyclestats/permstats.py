"""Coincidence statistics for the cycle structure of random permutations.

``E_r(n)``: probability that ``r`` independent uniform permutations of ``n``
letters have the same number of cycles.  ``W_r(n)``: probability that they
have the same cycle type.  Both are computed exactly; ``E_r`` also has a
floating-point path for large ``n`` used by the trend checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .partitions import iter_weighted

N_MAX_EXACT = 512


@dataclass(frozen=True)
class CycleCountDistribution:
    n: int
    probs: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        """``G_k(n)`` for ``1 <= k <= n``."""
        if not 1 <= k <= self.n:
            raise IndexError(k)
        return self.probs[k - 1]


@dataclass(frozen=True)
class AppendixSplit:
    n: int
    r: int
    sigma_A: Fraction
    sigma_B: Fraction
    sigma_C: Fraction
    L: float
    a: float

    @property
    def upper(self) -> Fraction:
        return self.sigma_A + self.sigma_B + self.sigma_C


def _check_nr(n, r, nmin=1):
    if n < nmin:
        raise ValueError(f"n must be >= {nmin}, got {n}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")


# -- cycle counts -----------------------------------------------------------

_stirling_rows: list[list[int]] = [[1]]


def stirling_row(n: int) -> list[int]:
    """Unsigned Stirling numbers of the first kind ``[c(n,0), ..., c(n,n)]``.

    Rows are built with ``c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`` and cached.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_stirling_rows) <= n:
        m = len(_stirling_rows)
        prev = _stirling_rows[-1] + [0]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = prev[k - 1] + (m - 1) * prev[k]
        _stirling_rows.append(row)
    return _stirling_rows[n]


def cycle_count_distribution(n: int, n_max_exact: int = N_MAX_EXACT) -> CycleCountDistribution:
    """Exact law of the number of cycles, ``G_k(n) = c(n,k)/n!``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > n_max_exact:
        raise ValueError(f"n={n} exceeds n_max_exact={n_max_exact}; use cycle_count_distribution_float")
    row = stirling_row(n)
    nf = math.factorial(n)
    return CycleCountDistribution(n, tuple(Fraction(c, nf) for c in row[1:]))


def cycle_count_distribution_float(n: int) -> np.ndarray:
    """``G_1(n) .. G_n(n)`` in float64 via the probability recurrence.

    ``G_k(m) = G_{k-1}(m-1)/m + (m-1)/m * G_k(m-1)``.  Every term is positive,
    so the recurrence is stable for ``n`` in the thousands.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _float_rows(n)[n]


def _float_rows(n: int, keep: Sequence[int] | None = None) -> dict[int, np.ndarray]:
    wanted = set(keep or ()) | {n}
    g = np.zeros(n + 1)
    g[1] = 1.0
    out = {1: g[1:2].copy()} if 1 in wanted else {}
    for m in range(2, n + 1):
        nxt = np.empty_like(g)
        nxt[0] = 0.0
        nxt[1:] = g[:-1] / m
        nxt += g * ((m - 1) / m)
        g = nxt
        if m in wanted:
            out[m] = g[1:m + 1].copy()
    return out


def E_r(n: int, r: int) -> Fraction:
    """``sum_k G_k(n)**r`` exactly."""
    _check_nr(n, r)
    row = stirling_row(n)
    return Fraction(sum(c**r for c in row[1:]), math.factorial(n) ** r)


def E_r_float(n: int, r: int) -> float:
    """Float value of ``E_r(n)``; works far beyond the exact range."""
    _check_nr(n, r)
    return math.fsum(cycle_count_distribution_float(n) ** r)


def E_r_float_many(ns: Sequence[int], r: int) -> dict[int, float]:
    """Float ``E_r`` at several ``n`` from a single recurrence pass."""
    ns = sorted(set(ns))
    for n in ns:
        _check_nr(n, r)
    rows = _float_rows(ns[-1], ns)
    return {n: math.fsum(rows[n] ** r) for n in ns}


@lru_cache(maxsize=None)
def W_r_partition_sum(n: int, r: int) -> Fraction:
    """``sum over partitions lam of n of p(lam)**r``, with ``W_r(0) = 1``.

    Summed as integers over the common denominator ``(n!)**r``: each
    ``n!/denominator`` is a conjugacy class size.
    """
    _check_nr(n, r, nmin=0)
    nf = math.factorial(n)
    total = sum((nf // d) ** r for _, d in iter_weighted(n))
    return Fraction(total, nf**r)


# -- characteristic function ------------------------------------------------

def char_function(n: int, t: float) -> complex:
    """``E exp(i t omega_n) = prod_{j<=n} (j - 1 + e^{it}) / j``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = cmath.exp(1j * t)
    out = complex(1.0)
    for j in range(1, n + 1):
        out *= (j - 1 + w) / j
    return out


def distribution_from_charfun(n: int, grid_size: int) -> np.ndarray:
    """Recover ``G_1(n) .. G_n(n)`` by inverting the characteristic function.

    The characteristic function is a trigonometric polynomial of degree ``n``,
    so sampling it at ``grid_size > n`` equispaced points and taking a DFT
    returns its coefficients without aliasing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if grid_size <= n:
        raise ValueError(f"grid_size={grid_size} must exceed n={n} to avoid aliasing")
    ts = 2 * np.pi * np.arange(grid_size) / grid_size
    w = np.exp(1j * ts)
    vals = np.ones(grid_size, dtype=complex)
    for j in range(1, n + 1):
        vals *= (j - 1 + w) / j
    # fft applies e^{-2 pi i k m / N}, which picks out the e^{ikt} coefficient.
    coeffs = np.fft.fft(vals) / grid_size
    return coeffs[1:n + 1].real


# -- asymptotics ------------------------------------------------------------

def asymptotic_c_r(r: int) -> float:
    """``1 / ((2 pi)^((r-1)/2) sqrt(r))``."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return 1.0 / ((2 * math.pi) ** ((r - 1) / 2) * math.sqrt(r))


def asymptotic_E(n: float, r: int) -> float:
    """Leading-order ``c_r / (log n)^((r-1)/2)`` with the natural log."""
    if n <= 1:
        raise ValueError("asymptotic_E needs n > 1 (log n must be positive)")
    return asymptotic_c_r(r) / math.log(n) ** ((r - 1) / 2)


def asymptotic_W(n: int, r: int, A_r: float) -> float:
    """Leading-order ``A_r / n**r``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return A_r / n**r


def trend_E(r: int, ns: Sequence[int], n_max_exact: int = N_MAX_EXACT) -> list[dict]:
    """Ratios ``E_r(n) / asymptotic_E(n, r)``; exact values where cheap, float beyond."""
    big = [n for n in ns if n > n_max_exact]
    floats = E_r_float_many(big, r) if big else {}
    rows = []
    for n in ns:
        if n in floats:
            value, mode = floats[n], "float"
        else:
            value, mode = float(E_r(n, r)), "exact"
        rows.append({"n": n, "E": value, "asymptotic": asymptotic_E(n, r),
                     "ratio": value / asymptotic_E(n, r), "mode": mode})
    return rows


# -- the three-set decomposition of W_r(n) ------------------------------------

def log2_bound(n: int) -> float:
    """``L(n) = log2(2 n^3)``."""
    return math.log2(2 * n**3)


def tail_window(n: int) -> float:
    """``a(n) = n^(2/3) / 3``."""
    return n ** (2 / 3) / 3


def _within_window(m: int, n: int) -> bool:
    # m <= n^(2/3)/3  <=>  27 m^3 <= n^2, exact in integers
    return 27 * m**3 <= n * n


def _classify(n: int, omega: int, longest: int) -> tuple[bool, bool, bool]:
    two_n3 = 2 * n**3
    few_cycles = 2**omega <= two_n3                    # omega <= L
    in_A = not few_cycles
    in_C = _within_window(n - longest, n)               # T >= n - a
    in_B = few_cycles and 2**n <= two_n3**longest and not in_C   # n/L <= T < n - a
    return in_A, in_B, in_C


def appendix_split(n: int, r: int) -> AppendixSplit:
    """Split ``W_r(n)`` over the many-cycles / intermediate / long-cycle sets.

    Membership uses exact integer comparisons.  The many-cycles and
    long-cycle sets may overlap; each set is summed on its own.
    """
    _check_nr(n, r)
    nf = math.factorial(n)
    sums = [0, 0, 0]
    for mult, d in iter_weighted(n):
        omega = sum(mult)
        longest = next(j for j in range(n, 0, -1) if mult[j - 1])
        w = (nf // d) ** r
        for idx, member in enumerate(_classify(n, omega, longest)):
            if member:
                sums[idx] += w
    den = nf**r
    return AppendixSplit(n, r, Fraction(sums[0], den), Fraction(sums[1], den),
                         Fraction(sums[2], den), log2_bound(n), tail_window(n))


def sigmaC_closed_form(n: int, r: int) -> Fraction:
    """``sum_{0 <= m <= a(n)} W_r(m) / (n - m)**r``."""
    _check_nr(n, r)
    total = Fraction(0)
    m = 0
    while _within_window(m, n):
        total += W_r_partition_sum(m, r) / (n - m) ** r
        m += 1
    return total


def appendix_sigmaC_identity_check(n: int, r: int) -> bool:
    return appendix_split(n, r).sigma_C == sigmaC_closed_form(n, r)
