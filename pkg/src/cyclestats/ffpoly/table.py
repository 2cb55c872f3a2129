"""Factorization data for every monic polynomial of one degree at once.

Monic ``f`` of degree ``n`` over ``F_q`` is addressed by the index
``sum_i c_i q^i`` of its lower coefficients.  The table is built degree by
degree: each composite ``f`` is written uniquely as ``P * g`` where ``P`` is
its largest irreducible factor (irreducibles ordered by degree, then index)
and every factor of ``g`` is at most ``P``.  Entries not reached this way are
the irreducibles of that degree.  All updates are vectorized over ``g``.

Two additive codes summarize an entry: the cycle type, and the multiset of
exponents.  Both use the mixed radix ``n // j + 1`` at position ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from ..partitions import Partition
from .poly import _checked_prime

SCAN_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A requested enumeration exceeds the configured size guard."""


def check_budget(q: int, n: int, allow_large: bool = False, budget: int = SCAN_BUDGET):
    if not allow_large and q**n > budget:
        raise BudgetExceeded(f"q^n = {q}^{n} exceeds the scan budget {budget}; pass allow_large to override")


def _radix_weights(n: int) -> np.ndarray:
    w = [1]
    for j in range(1, n + 1):
        w.append(w[-1] * (n // j + 1))
    return np.array(w[:n + 1], dtype=np.int64)   # w[j-1] is the weight of position j


def decode_code(code: int, n: int) -> tuple[int, ...]:
    """Mixed-radix digits ``(m_1, ..., m_n)`` of a cycle or exponent code."""
    out = []
    code = int(code)
    for j in range(1, n + 1):
        code, d = divmod(code, n // j + 1)
        out.append(d)
    return tuple(out)


def encode_partition(lam: Partition) -> int:
    w = _radix_weights(lam.n)
    return int(sum(int(w[j]) * m for j, m in enumerate(lam.mult)))


@dataclass
class _Level:
    lpf: np.ndarray      # id of the largest irreducible factor (0 for the constant 1)
    topexp: np.ndarray   # its exponent
    cyc: np.ndarray
    expc: np.ndarray
    omega: np.ndarray
    big_omega: np.ndarray
    phi: np.ndarray
    sigma: np.ndarray


@dataclass(frozen=True)
class FactorTable:
    q: int
    n: int
    cyc: np.ndarray
    expc: np.ndarray
    omega: np.ndarray
    big_omega: np.ndarray
    phi: np.ndarray
    sigma: np.ndarray

    @property
    def size(self) -> int:
        return self.q**self.n

    @property
    def squarefree(self) -> np.ndarray:
        return self.omega == self.big_omega

    def d_k(self, k: int) -> np.ndarray:
        """``d_k`` for every entry, looked up per distinct exponent multiset."""
        if k < 1:
            raise ValueError("k must be >= 1")
        codes, inverse = np.unique(self.expc, return_inverse=True)
        vals = []
        for code in codes:
            v = 1
            for e, count in enumerate(decode_code(code, self.n), 1):
                v *= comb(e + k - 1, k - 1) ** count
            vals.append(v)
        return np.array(vals, dtype=np.int64)[inverse]

    def values(self, alpha: str, k: int | None = None) -> np.ndarray:
        if alpha == "d_k":
            if k is None or k < 2:
                raise ValueError("d_k needs k >= 2")
            return self.d_k(k)
        try:
            return getattr(self, {"omega": "omega", "big_omega": "big_omega",
                                  "phi": "phi", "sigma": "sigma"}[alpha])
        except KeyError:
            raise ValueError(f"unknown arithmetic function {alpha!r}") from None

    def partition(self, code: int) -> Partition:
        return Partition(self.n, decode_code(code, self.n))

    def cycle_type_at(self, idx: int) -> Partition:
        return self.partition(self.cyc[idx])

    def census(self) -> dict[Partition, int]:
        """Number of ``f`` of each cycle type."""
        codes, counts = np.unique(self.cyc, return_counts=True)
        return {self.partition(c): int(k) for c, k in zip(codes, counts)}


def _digits(idx: np.ndarray, q: int, length: int) -> np.ndarray:
    out = np.empty((idx.size, length), dtype=np.int64)
    rest = idx.copy()
    for i in range(length):
        rest, out[:, i] = np.divmod(rest, q)
    return out


@lru_cache(maxsize=8)
def factor_table(q: int, n: int, allow_large: bool = False) -> FactorTable:
    """Sieve the factorization data of all ``q**n`` monic polynomials of degree ``n``."""
    _checked_prime(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    check_budget(q, n, allow_large)
    weights = _radix_weights(n)
    i64 = np.int64
    one = np.ones(1, dtype=i64)
    levels = [_Level(np.zeros(1, i64), np.zeros(1, i64), np.zeros(1, i64), np.zeros(1, i64),
                     np.zeros(1, i64), np.zeros(1, i64), one.copy(), one.copy())]
    irreducibles: list[tuple[int, int, np.ndarray]] = []   # (id, degree, coefficient vector)
    next_id = 1
    qpow = q ** np.arange(n + 1, dtype=i64)
    for m in range(1, n + 1):
        size = q**m
        lv = _Level(*(np.zeros(size, i64) for _ in range(8)))
        filled = np.zeros(size, dtype=bool)
        for pid, e, pc in irreducibles:
            if e >= m:
                break
            sub = levels[m - e]
            g_idx = np.nonzero(sub.lpf <= pid)[0]
            if g_idx.size == 0:
                continue
            gd = np.concatenate([_digits(g_idx, q, m - e), np.ones((g_idx.size, 1), i64)], axis=1)
            prod = np.zeros((g_idx.size, m + 1), dtype=i64)
            for i, c in enumerate(pc):
                if c:
                    prod[:, i:i + m - e + 1] += c * gd
            f_idx = (prod[:, :m] % q) @ qpow[:m]
            same = sub.lpf[g_idx] == pid
            e_old = np.where(same, sub.topexp[g_idx], 0)
            e_new = e_old + 1
            norm = q**e
            lv.lpf[f_idx] = pid
            lv.topexp[f_idx] = e_new
            lv.cyc[f_idx] = sub.cyc[g_idx] + weights[e - 1]
            lv.expc[f_idx] = (sub.expc[g_idx] + weights[e_new - 1]
                              - np.where(same, weights[np.maximum(e_old, 1) - 1], 0))
            lv.omega[f_idx] = sub.omega[g_idx] + ~same
            lv.big_omega[f_idx] = sub.big_omega[g_idx] + 1
            lv.phi[f_idx] = sub.phi[g_idx] * np.where(same, norm, norm - 1)
            s_old = (norm ** (e_old + 1) - 1) // (norm - 1)
            s_new = (norm ** (e_new + 1) - 1) // (norm - 1)
            lv.sigma[f_idx] = sub.sigma[g_idx] // s_old * s_new
            filled[f_idx] = True
        irr = np.nonzero(~filled)[0]
        ids = next_id + np.arange(irr.size, dtype=i64)
        next_id += irr.size
        lv.lpf[irr] = ids
        lv.topexp[irr] = 1
        lv.cyc[irr] = weights[m - 1]
        lv.expc[irr] = weights[0]
        lv.omega[irr] = 1
        lv.big_omega[irr] = 1
        lv.phi[irr] = q**m - 1
        lv.sigma[irr] = q**m + 1
        if m < n:
            digits = _digits(irr, q, m)
            for pid, row in zip(ids.tolist(), digits):
                irreducibles.append((pid, m, np.append(row, 1)))
        levels.append(lv)
    top = levels[n]
    arrays = [top.cyc, top.expc, top.omega, top.big_omega, top.phi, top.sigma]
    for arr in arrays:
        arr.flags.writeable = False     # shared through the cache
    return FactorTable(q, n, *arrays)


def shifted_indices(q: int, n: int, shift_coeffs) -> np.ndarray:
    """Index of ``f + a`` for every monic ``f`` of degree ``n`` (``deg a < n``)."""
    a = list(shift_coeffs) + [0] * (n - len(shift_coeffs))
    idx = np.arange(q**n, dtype=np.int64)
    out = np.zeros_like(idx)
    rest = idx
    scale = 1
    for i in range(n):
        rest, d = np.divmod(rest, q)
        out += ((d + a[i]) % q) * scale
        scale *= q
    return out
