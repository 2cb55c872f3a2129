"""Integer partitions as multiplicity vectors, and Cauchy's cycle-type formula.

A partition of ``n`` is stored densely as ``mult = (m_1, ..., m_n)`` where
``m_j`` counts the parts equal to ``j``, so ``sum(j * m_j) == n``.  The same
object describes the cycle type of a permutation of ``n`` letters and the
factorization degree pattern of a degree ``n`` polynomial.

Exact probabilities are ``fractions.Fraction`` values, always reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("partition size must be non-negative")
        if len(self.mult) != self.n:
            raise ValueError(f"multiplicity vector must have length {self.n}")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be non-negative")
        if sum(j * m for j, m in enumerate(self.mult, 1)) != self.n:
            raise ValueError(f"{self.mult} is not a partition of {self.n}")

    @classmethod
    def from_parts(cls, parts: Sequence[int], n: int | None = None) -> "Partition":
        """Build from a list of part sizes, e.g. ``[3, 1, 1]``."""
        size = sum(parts) if n is None else n
        mult = [0] * size
        for part in parts:
            if part < 1:
                raise ValueError("parts must be positive")
            mult[part - 1] += 1
        return cls(size, tuple(mult))

    @classmethod
    def from_mult(cls, mult: Sequence[int]) -> "Partition":
        """Build from a (possibly short) multiplicity sequence; the size is inferred."""
        n = sum(j * m for j, m in enumerate(mult, 1))
        padded = tuple(mult[:n]) + (0,) * max(0, n - len(mult))
        if any(mult[n:]):
            raise ValueError("trailing multiplicities exceed the partition size")
        return cls(n, padded)

    @property
    def parts(self) -> tuple[int, ...]:
        """Part sizes in non-increasing order."""
        out: list[int] = []
        for j in range(self.n, 0, -1):
            out.extend([j] * self.mult[j - 1])
        return tuple(out)

    def num_parts(self) -> int:
        return num_parts(self)

    def longest_part(self) -> int:
        return longest_part(self)

    def __str__(self) -> str:
        if self.n == 0:
            return "()"
        terms = [f"{j}^{self.mult[j - 1]}" if self.mult[j - 1] > 1 else str(j)
                 for j in range(self.n, 0, -1) if self.mult[j - 1]]
        return "(" + " ".join(terms) + ")"


def _descending(n: int) -> Iterator[tuple[list[int], int]]:
    # Yields (mult, denominator) with the same mutable list each time; callers
    # must copy.  The denominator prod_j j**m_j * m_j! is carried along.
    mult = [0] * n
    factor = [[j**m * factorial(m) for m in range(n // j + 1)] for j in range(1, n + 1)]

    def rec(remaining: int, maxpart: int, denom: int):
        if remaining == 0:
            yield mult, denom
            return
        for j in range(min(remaining, maxpart), 0, -1):
            top = remaining // j
            row = factor[j - 1]
            if j == 1:
                mult[0] = top
                yield mult, denom * row[top]
                mult[0] = 0
                continue
            for m in range(top, 0, -1):
                mult[j - 1] = m
                yield from rec(remaining - m * j, j - 1, denom * row[m])
            mult[j - 1] = 0

    yield from rec(n, n, 1)


def iter_multiplicities(n: int) -> Iterator[tuple[int, ...]]:
    """Stream the multiplicity tuples of every partition of ``n``.

    Same order as :func:`enumerate_partitions`, without the validation cost of
    building :class:`Partition` objects.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for mult, _ in _descending(n):
        yield tuple(mult)


def iter_weighted(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Stream ``(mult, denominator)`` pairs, where ``1/denominator`` is the
    Cauchy probability of the partition.  Same order as :func:`enumerate_partitions`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for mult, denom in _descending(n):
        yield tuple(mult), denom


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` exactly once.

    Order is decreasing lexicographic on the non-increasing part list, so for
    ``n = 4``: ``(4), (3 1), (2 2), (2 1 1), (1 1 1 1)``.  ``n = 0`` yields the
    single empty partition.
    """
    for mult in iter_multiplicities(n):
        yield Partition(n, mult)


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` (counted by the standard part-bounded recursion)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def cycle_type_denominator(mult: Sequence[int]) -> int:
    """``prod_j j**m_j * m_j!``: the centralizer order of the cycle type."""
    return prod(j**m * factorial(m) for j, m in enumerate(mult, 1) if m)


def class_size(lam: Partition) -> int:
    """Number of permutations of ``lam.n`` letters with cycle type ``lam``."""
    return factorial(lam.n) // cycle_type_denominator(lam.mult)


def cauchy_probability(lam: Partition) -> Fraction:
    """Probability that a uniform permutation has cycle type ``lam``.

    Equal to ``1 / prod_j (j**m_j * m_j!)``; the empty partition gives 1.
    """
    return Fraction(1, cycle_type_denominator(lam.mult))


def num_parts(lam: Partition) -> int:
    """Total number of parts (cycles), ``sum_j m_j``."""
    return sum(lam.mult)


def longest_part(lam: Partition) -> int:
    if lam.n == 0:
        raise ValueError("longest part is undefined for the empty partition")
    for j in range(lam.n, 0, -1):
        if lam.mult[j - 1]:
            return j
    raise AssertionError("unreachable: nonempty partition with no parts")
