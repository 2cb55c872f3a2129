"""
When does phi see the cycle type?
=================================

For squarefree f, phi(f) = q^n prod_j (1 - q^-j)^lam_j.  Different cycle
types give different polynomials in z = 1/q, so once q is large enough phi
determines the cycle type.
"""

from cyclestats.ffpoly.structure import (distinctness_certificate, multiplicities_from_structure,
                                         phi_structure)
from cyclestats.partitions import Partition
from cyclestats.scanner import collision_probe

lam = Partition.from_parts([3, 1, 1])
P = phi_structure(lam)
print("cycle type", lam, "-> structure polynomial coefficients", P.coeffs)
print("recovered from the polynomial:", multiplicities_from_structure(P, 5))

print("\n n  threshold  collisions at small q")
for n in range(2, 10):
    cert = distinctness_certificate(n, "phi")
    small = sorted({q for q, _, _ in cert.colliding_pairs})
    print(f"{n:2d}  {cert.q_threshold:9d}  {small}")

# an actual collision among squarefree polynomials below the threshold
cert = distinctness_certificate(7, "phi")
q, a, b = cert.colliding_pairs[0]
print(f"\nn = 7, q = {q}: {a} and {b} give the same phi")

# above the threshold the exhaustive probe finds nothing
for n, q in ((3, 5), (4, 7), (5, 11)):
    print(f"probe n = {n}, q = {q}: {len(collision_probe(n, q))} collisions")
