"""
Polynomials over F_p
====================

Factoring, cycle types and the arithmetic functions omega, Omega, d_k,
phi and sigma.
"""

from collections import Counter

from cyclestats.ffpoly import (Poly, big_omega, cycle_type, d_k, factor, factor_table,
                               factor_trial_division, is_squarefree, iter_monic, omega,
                               parse_poly, phi, phi_by_enumeration, sigma)

f = parse_poly("2,0,1,1,0,1", 3)       # 2 + T^2 + T^3 + T^5 over F_3
fac = factor(f)
print("f =", f)
print("factors:", fac)
print("cycle type:", cycle_type(f), " squarefree:", is_squarefree(f))
print(f"omega = {omega(fac)}, Omega = {big_omega(fac)}, d_3 = {d_k(fac, 3)}, "
      f"phi = {phi(fac)}, sigma = {sigma(fac)}")
print("same as trial division:", fac == factor_trial_division(f))
print("phi by counting units:", phi_by_enumeration(f))

# a repeated factor
g = Poly(5, (1, 2, 1))                  # (T + 1)^2
print("\n(T+1)^2 over F_5 factors as", factor(g), " phi =", phi(g))

# cycle types of all quartics over F_5 behave like permutations of S_4
print("\nCycle types of the 625 monic quartics over F_5:")
census = Counter(cycle_type(h) for h in iter_monic(5, 4))
for lam, count in sorted(census.items(), key=lambda kv: -kv[1]):
    print(f"  {str(lam):10s} {count:4d}")

# the same numbers from the vectorized table
table = factor_table(5, 4)
print("\ntable census agrees:", table.census() == dict(census))
print("squarefree quartics:", int(table.squarefree.sum()), "= 5^4 - 5^3 =", 5**4 - 5**3)
