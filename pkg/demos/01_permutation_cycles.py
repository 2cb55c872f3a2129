"""
Cycles of random permutations
=============================

How likely are two random permutations to have the same number of cycles,
or the same cycle type?  Everything below is exact until the last section.
"""

from fractions import Fraction

from cyclestats.partitions import cauchy_probability, enumerate_partitions
from cyclestats.permstats import (E_r, E_r_float, W_r_partition_sum, asymptotic_E,
                                  cycle_count_distribution, distribution_from_charfun)

print("=" * 60)
print(" Cycle types of S_4")
print("=" * 60)

# each cycle type with its Cauchy probability
for lam in enumerate_partitions(4):
    print(f"  {str(lam):10s} p = {cauchy_probability(lam)}")

G = cycle_count_distribution(4)
print("\nNumber of cycles in S_4:", [str(g) for g in G.probs])

# two permutations agreeing
print("\nE_2(4) =", E_r(4, 2), "  (same number of cycles)")
print("W_2(4) =", W_r_partition_sum(4, 2), "  (same cycle type)")
assert W_r_partition_sum(4, 2) == sum(cauchy_probability(l) ** 2 for l in enumerate_partitions(4))

print("\n" + "-" * 60)
print(" The distribution from its characteristic function")
print("-" * 60)
n = 30
via_fft = distribution_from_charfun(n, 64)
exact = [float(g) for g in cycle_count_distribution(n).probs]
print(f"n = {n}: max |DFT - exact| = {max(abs(a - b) for a, b in zip(via_fft, exact)):.2e}")

print("\n" + "-" * 60)
print(" Slow approach to the limit")
print("-" * 60)
# E_2(n) ~ 1 / (2 sqrt(pi log n)), a very slow trend
for n in (16, 64, 256, 1024, 4096):
    e = E_r_float(n, 2)
    print(f"  n = {n:5d}   E_2 = {e:.6f}   asymptotic = {asymptotic_E(n, 2):.6f}   ratio = {e / asymptotic_E(n, 2):.4f}")

print("\nE_3(10) =", E_r(10, 3), "=", float(E_r(10, 3)))
print("Fraction check:", E_r(2, 2) == Fraction(1, 2))
