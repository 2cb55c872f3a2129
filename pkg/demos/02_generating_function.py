"""
The generating function of W_r(n)
==================================

W_r(n) is the chance that r random permutations of S_n share a cycle
type.  Its generating function is a product of hypergeometric factors, and
its value at z = 1 is the constant A_r.
"""

from cyclestats.permstats import W_r_partition_sum
from cyclestats.series import (A_r_partial_sum, A_r_product, W_series_exp_polylog,
                               W_series_product, hyper_Ir, trend_W)

# three ways to get the same numbers
N = 12
prod = W_series_product(2, N)
expo = W_series_exp_polylog(2, N)
print("First coefficients of W^(2)(z):")
for n in range(7):
    print(f"  z^{n}: {prod[n]}")
print("product == exp-polylog == partition sum up to z^12:",
      prod == expo and list(prod.coeffs) == [W_r_partition_sum(n, 2) for n in range(N + 1)])

print("\nI_2(y) = sum y^j / (j!)^2 starts", [str(c) for c in hyper_Ir(2, 4).coeffs])

# the constant as a certified bracket
print("\nA_r brackets:")
for r in (2, 3, 4):
    est = A_r_product(r)
    print(f"  A_{r} in [{est.lower:.8f}, {est.upper:.8f}]   width {est.width:.1e}   K = {est.terms_used}")

# partial sums creep up towards A_2
print("\nPartial sums of W_2(m):")
for M in (0, 2, 10, 50, 200):
    print(f"  M = {M:3d}: {A_r_partial_sum(2, M):.6f}")

# W_2(n) n^2 / A_2 tends to 1, but slowly
print("\nW_2(n) n^2 / A_2:")
for row in trend_W(2, [25, 50, 100, 200, 400]):
    print(f"  n = {row['n']:3d}: {row['ratio']:.5f}")
