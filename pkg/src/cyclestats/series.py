"""Truncated power series and the generating function of ``W_r(n)``.

``W^(r)(z) = sum_n W_r(n) z^n`` factors as ``prod_k I_r(z^k / k^r)`` with
``I_r(y) = sum_j y^j / (j!)^r``.  Taking logs gives a second route through
polylogarithms.  Both are computed here on exact-rational truncations, and
``A_r = W^(r)(1)`` is bracketed from the product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.special import zeta

Number = Fraction | float


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` modulo ``z^(N+1)``."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def zeros(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        zero = Fraction(0) if exact else 0.0
        return cls((zero,) * (order + 1))

    @classmethod
    def one(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        s = cls.zeros(order, exact)
        return s.with_coeff(0, Fraction(1) if exact else 1.0)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def with_coeff(self, i: int, value) -> "TruncatedSeries":
        c = list(self.coeffs)
        c[i] = value
        return TruncatedSeries(tuple(c))

    def _same_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        N = self.order
        out = [self.coeffs[0] * 0] * (N + 1)
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                if i + j > N:
                    break
                out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative, padded with a zero so the order is preserved."""
        c = self.coeffs
        return TruncatedSeries(tuple(k * c[k] for k in range(1, len(c))) + (c[0] * 0,))

    def log(self) -> "TruncatedSeries":
        """Formal log of a series with constant term 1.

        Uses ``b' = a'/a``: ``n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}``.
        """
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("log needs constant term 1")
        N = self.order
        b = [a[0] * 0] * (N + 1)
        for n in range(1, N + 1):
            acc = n * a[n]
            for k in range(1, n):
                if b[k] and a[n - k]:
                    acc -= k * b[k] * a[n - k]
            b[n] = acc / n
        return TruncatedSeries(tuple(b))

    def exp(self) -> "TruncatedSeries":
        """Formal exp of a series with constant term 0.

        Uses ``b' = a' b``: ``n b_n = sum_{k=1}^{n} k a_k b_{n-k}``.
        """
        a = self.coeffs
        if a[0] != 0:
            raise ValueError("exp needs constant term 0")
        N = self.order
        b = [a[0] * 0] * (N + 1)
        b[0] = a[0] * 0 + 1
        nz = [(k, k * a[k]) for k in range(1, N + 1) if a[k]]
        for n in range(1, N + 1):
            acc = a[0] * 0
            for k, ka in nz:
                if k > n:
                    break
                acc += ka * b[n - k]
            b[n] = acc / n
        return TruncatedSeries(tuple(b))

    def substitute_monomial(self, c, k: int, order: int | None = None) -> "TruncatedSeries":
        """Return ``S(c z^k)`` truncated at ``order`` (default: own order)."""
        N = self.order if order is None else order
        out = [self.coeffs[0] * 0] * (N + 1)
        power = self.coeffs[0] * 0 + 1
        for j, a in enumerate(self.coeffs):
            if j * k > N:
                break
            out[j * k] = a * power
            power *= c
        return TruncatedSeries(tuple(out))

    def evaluate(self, x) -> Number:
        acc = self.coeffs[0] * 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def to_float(self) -> np.ndarray:
        return np.array([float(a) for a in self.coeffs])


@dataclass(frozen=True)
class ConstantEstimate:
    """A lower estimate ``value`` with ``true in [value, value * exp(tail_bound)]``."""

    value: float
    tail_bound: float
    terms_used: int

    @property
    def lower(self) -> float:
        return self.value

    @property
    def upper(self) -> float:
        return self.value * math.exp(self.tail_bound)

    @property
    def width(self) -> float:
        return self.value * math.expm1(self.tail_bound)

    def __contains__(self, x: float) -> bool:
        return self.lower <= x <= self.upper


def hyper_Ir(r: int, order: int, y: Number = Fraction(1)) -> TruncatedSeries:
    """Coefficients ``y^j / (j!)^r`` for ``j <= order``.

    Evaluating the result at 1 gives the partial sum of ``I_r(y)``; with
    ``y = 1`` the series is ``I_r`` itself in its formal variable.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if order < 0:
        raise ValueError("order must be non-negative")
    exact = isinstance(y, (Fraction, int))
    term = Fraction(1) if exact else 1.0
    y = Fraction(y) if exact else float(y)
    out = []
    for j in range(order + 1):
        if j:
            term = term * y / j**r
        out.append(term)
    return TruncatedSeries(tuple(out))


def W_series_product(r: int, order: int, exact: bool = True) -> TruncatedSeries:
    """``prod_{k=1}^{N} I_r(z^k / k^r)`` truncated at ``z^N``.

    Coefficient ``n`` is ``W_r(n)``.  ``exact=False`` runs the same product in
    float64 with numpy; all terms are positive, so there is no cancellation.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if order < 0:
        raise ValueError("order must be non-negative")
    if not exact:
        return TruncatedSeries(tuple(_W_product_float(r, order).tolist()))
    acc = list(TruncatedSeries.one(order).coeffs)
    for k in range(1, order + 1):
        factor = []
        term = Fraction(1)
        j = 0
        while k * j <= order:
            factor.append(term)
            j += 1
            term = term / (k**r * j**r)
        new = list(acc)
        # multiply in place by 1 + t_1 z^k + t_2 z^2k + ...; the j = 0 term is 1
        for i in range(order + 1):
            ai = acc[i]
            if not ai:
                continue
            for j in range(1, len(factor)):
                if i + k * j > order:
                    break
                new[i + k * j] += ai * factor[j]
        acc = new
    return TruncatedSeries(tuple(acc))


def _W_product_float(r: int, order: int) -> np.ndarray:
    acc = np.zeros(order + 1)
    acc[0] = 1.0
    for k in range(1, order + 1):
        factor = np.zeros(order + 1)
        term, j = 1.0, 0
        while k * j <= order:
            factor[k * j] = term
            j += 1
            term /= float(k) ** r * float(j) ** r
        acc = np.convolve(acc, factor)[:order + 1]
    return acc


def polylog_series(nu: int, order: int) -> TruncatedSeries:
    """``Li_nu(z) = sum_{j>=1} z^j / j^nu`` truncated at ``z^order``."""
    return TruncatedSeries((Fraction(0),) + tuple(Fraction(1, j**nu) for j in range(1, order + 1)))


def log_Ir_coefficients(r: int, order: int) -> TruncatedSeries:
    """``H_r(y) = log I_r(y)``: coefficients ``h_1, h_2, ...`` with ``h_0 = 0``."""
    return hyper_Ir(r, order).log()


def W_series_exp_polylog(r: int, order: int) -> TruncatedSeries:
    """``exp(sum_l h_l Li_{r l}(z^l))`` truncated at ``z^N``; must equal the product form."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if order < 0:
        raise ValueError("order must be non-negative")
    h = log_Ir_coefficients(r, order)
    exponent = TruncatedSeries.zeros(order)
    for ell in range(1, order + 1):
        if not h[ell]:
            continue
        li = polylog_series(r * ell, order // ell)
        exponent = exponent + li.substitute_monomial(Fraction(1), ell, order).scale(h[ell])
    return exponent.exp()


def default_factor_count(r: int) -> int:
    """Enough factors for a bracket narrower than 1e-4 (r = 2) or 1e-5 (r >= 3)."""
    return 100_000 if r == 2 else 1_000


def A_r_product(r: int, K: int | None = None, J: int = 30) -> ConstantEstimate:
    """Bracket ``A_r = prod_{k>=1} I_r(1/k^r)``.

    ``value`` is the product of the first ``K`` factors, each truncated to
    ``J`` terms, nudged down by the float rounding allowance.  Omitted
    factors satisfy ``1 <= I_r(y) <= e^y``, so they multiply to at most
    ``exp(1/((r-1) K^(r-1)))``.  Each truncated factor is short by at most
    twice its first omitted term, and all of this goes into ``tail_bound``.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    K = default_factor_count(r) if K is None else K
    if K < 1 or J < 1:
        raise ValueError("K and J must be >= 1")
    logs = []
    truncation = 0.0
    inv_fact_r = [1.0]
    for j in range(1, J + 1):
        inv_fact_r.append(inv_fact_r[-1] / float(j) ** r)
    for k in range(1, K + 1):
        y = 1.0 / float(k) ** r
        acc, power = 0.0, 1.0
        for j in range(J):
            t = power * inv_fact_r[j]
            if t == 0.0:
                break
            acc += t
            power *= y
        else:
            truncation += 2.0 * power * inv_fact_r[J]
        logs.append(math.log1p(acc - 1.0))
    rounding = K * (J + 4) * 2.0**-52
    tail = 1.0 / ((r - 1) * K ** (r - 1)) + truncation + 2 * rounding
    value = math.exp(math.fsum(logs) - rounding)
    return ConstantEstimate(value, tail, K)


def W_values(r: int, M: int) -> list[Fraction]:
    """Exact ``W_r(0), ..., W_r(M)`` from the product form."""
    return list(W_series_product(r, M).coeffs)


def A_r_partial_sum(r: int, M: int) -> float:
    """``sum_{m=0}^{M} W_r(m)``, summed exactly and returned as a float."""
    if M < 0:
        raise ValueError("M must be non-negative")
    return float(sum(W_values(r, M), Fraction(0)))


def partial_sum_tail_estimate(r: int, M: int, A_r: float) -> float:
    """Heuristic size of the omitted tail, ``A_r * sum_{m>M} m^-r``; not a bound."""
    return A_r * float(zeta(r, M + 1))


def trend_W(r: int, ns: Sequence[int], A_r: float | None = None) -> list[dict]:
    """Ratios ``W_r(n) n^r / A_r`` from float-mode coefficients."""
    A = A_r_product(r).value if A_r is None else A_r
    w = W_series_product(r, max(ns), exact=False)
    return [{"n": n, "W": float(w[n]), "asymptotic": A / n**r, "ratio": float(w[n]) * n**r / A,
             "mode": "float"} for n in ns]
