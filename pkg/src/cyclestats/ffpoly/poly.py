"""Polynomials over a prime field F_p.

A polynomial ``c_0 + c_1 T + ... + c_d T^d`` is a tuple ``(c_0, ..., c_d)``
of residues with ``c_d != 0``; the zero polynomial is ``()``.  The list
helpers prefixed ``_`` operate on plain lists and are the hot path for the
factorization and enumeration code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from sympy import isprime


@lru_cache(maxsize=None)
def _checked_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError(f"{p} is not a prime")
    return p


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        _checked_prime(self.p)

    def __str__(self):
        return f"F_{self.p}"


# -- list level -------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    r = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            base = i - db
            for j in range(db):
                r[base + j] = (r[base + j] - c * b[j]) % p
        r[i] = 0
    del r[db:]
    return _trim(q), _trim([c % p for c in r])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _mulmod(a, b, m, p):
    return _mod(_mul(a, b, p), m, p)


def _powmod(a, e, m, p):
    result = [1]
    base = _mod(a, m, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, p)
    return _mod(result, m, p) if len(m) > 1 else []


def _derivative(a, p):
    return _trim([(i * c) % p for i, c in enumerate(a)][1:])


# -- value type -------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Immutable polynomial over ``F_p`` with little-endian coefficients."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _checked_prime(self.p)
        c = [x % self.p for x in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    @classmethod
    def _raw(cls, p: int, coeffs) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def monic(cls, p: int, lower: Sequence[int]) -> "Poly":
        """Monic polynomial ``lower[0] + ... + lower[n-1] T^(n-1) + T^n``."""
        return cls(p, tuple(lower) + (1,))

    @classmethod
    def T(cls, p: int) -> "Poly":
        return cls._raw(_checked_prime(p), (0, 1))

    @classmethod
    def constant(cls, p: int, c: int) -> "Poly":
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def _wrap(self, coeffs) -> "Poly":
        return Poly._raw(self.p, coeffs)

    def _coerce(self, other) -> tuple[int, ...]:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError(f"field mismatch: F_{self.p} vs F_{other.p}")
            return other.coeffs
        if isinstance(other, int):
            return tuple(_trim([other % self.p]))
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(_add(self.coeffs, b, self.p))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(_sub(self.coeffs, b, self.p))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(_sub(b, self.coeffs, self.p))

    def __neg__(self):
        return self._wrap(_sub([], self.coeffs, self.p))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(_mul(self.coeffs, b, self.p))

    __rmul__ = __mul__

    def __divmod__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        q, r = _divmod(self.coeffs, b, self.p)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out, base = [1], list(self.coeffs)
        while e:
            if e & 1:
                out = _mul(out, base, self.p)
            e >>= 1
            if e:
                base = _mul(base, base, self.p)
        return self._wrap(out)

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        """``self**e mod modulus`` by square-and-multiply."""
        m = self._coerce(modulus)
        if not m:
            raise ZeroDivisionError("polynomial division by zero")
        return self._wrap(_powmod(list(self.coeffs), e, list(m), self.p))

    def derivative(self) -> "Poly":
        return self._wrap(_derivative(self.coeffs, self.p))

    def make_monic(self) -> "Poly":
        return self._wrap(_monic(self.coeffs, self.p))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; ``gcd(f, 0) = monic(f)`` and ``gcd(0, 0) = 0``."""
        return self._wrap(_gcd(self.coeffs, self._coerce(other), self.p))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def monic_from_index(p: int, n: int, idx: int) -> Poly:
    """Monic degree ``n`` polynomial whose lower coefficients are the base-``p`` digits of ``idx``."""
    lower = []
    for _ in range(n):
        idx, c = divmod(idx, p)
        lower.append(c)
    return Poly._raw(p, tuple(lower) + (1,))


def index_of(f: Poly) -> int:
    """Inverse of :func:`monic_from_index` for a monic ``f``."""
    if not f.is_monic():
        raise ValueError("index is defined for monic polynomials only")
    idx = 0
    for c in reversed(f.coeffs[:-1]):
        idx = idx * f.p + c
    return idx


def iter_monic(p: int, n: int) -> Iterator[Poly]:
    """All ``p**n`` monic polynomials of degree ``n``, in index order."""
    _checked_prime(p)
    for idx in range(p**n):
        yield monic_from_index(p, n, idx)


def parse_poly(text: str, q: int) -> Poly:
    """Parse the little-endian text format ``"c0,c1,...,cn"`` over ``F_q``.

    Coefficients must already be residues in ``[0, q)``.
    """
    text = text.strip()
    if not text:
        return Poly(q, ())
    try:
        coeffs = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad polynomial text {text!r}: expected comma-separated integers") from None
    if any(not 0 <= c < q for c in coeffs):
        raise ValueError(f"coefficients of {text!r} must lie in [0, {q})")
    return Poly(q, tuple(coeffs))


def format_poly(f: Poly) -> str:
    """Little-endian text format; the zero polynomial renders as ``"0"``."""
    return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"
