"""
Coincidences along shifts
=========================

Count monic f of degree n over F_q with alpha(f) = alpha(f + 1) and watch
the proportion settle on the permutation model as q grows.
"""

from cyclestats.ffpoly import Poly
from cyclestats.scanner import (ShiftSystem, census_max_deviation, deviation_sweep,
                                joint_census, scan)

n, r = 4, 2
primes = [3, 5, 7, 11, 13, 17, 19, 23]

for alpha in ("omega", "phi"):
    reps = deviation_sweep(n, r, alpha, primes)
    print(f"\n{alpha}(f) = {alpha}(f + 1), n = {n}; model value {reps[0].model_value}"
          f" = {float(reps[0].model_value):.5f}")
    print("   q        S    S/q^n    deviation   dev*sqrt(q)")
    for rep in reps:
        print(f"  {rep.q:2d} {rep.S:8d}  {float(rep.probability):.5f}   {rep.deviation:.5f}     "
              f"{rep.normalized_deviation:.4f}")

# the count does not care where the shift system sits
sys = ShiftSystem(7, 3, (Poly(7, (0,)), Poly(7, (2, 1)), Poly(7, (5, 0, 3))))
moved = sys.translate(Poly(7, (1, 4, 4)))
print("\ntranslation leaves S unchanged:", scan(sys, "sigma").S == scan(moved, "sigma").S)

# pairs of cycle types look independent
census = joint_census(ShiftSystem.constants(13, 3, 2))
print("joint census over F_13, n = 3: total", sum(census.values()),
      " max deviation from independence", f"{census_max_deviation(census, 13, 3):.4f}")

# divisor counts d_2 are compared against the same model as omega
rep = scan(ShiftSystem.constants(5, 3, 2), "d_k", k=2)
print(f"d_2(f) = d_2(f + 1) over F_5, n = 3: {rep.S}/125 vs model {rep.model_value}")
