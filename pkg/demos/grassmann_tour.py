"""Equivariant cohomology of Gr(2, 4), from Schur products to idempotents.

Run with ``python demos/grassmann_tour.py``.
"""
from fractions import Fraction

from foamcalc.grassmann import GrassmannAlgebra, idempotents
from foamcalc.symcore import Partition, lr_product

print("s_21 * s_21 =", {str(g): c for g, c in lr_product(Partition((2, 1)), Partition((2, 1))).items()})

G = GrassmannAlgebra(4, 2)
print(f"Gr(2,4): rank {G.rank}, basis {[str(lam) for lam in G.basis]}")

s1 = G.schur((1,))
print("s1^2 =", G.multiply(s1, s1).to_json())
print("tr(s_22) =", G.trace(G.schur((2, 2))))

# the Gram matrix is antidiagonal in the Schur basis
for row in G.gram():
    print("  ", " ".join(f"{str(x):>3}" for x in row))

# at distinct parameters the algebra splits into one line per 2-subset
sigma = [Fraction(v) for v in (1, 2, 4, 7)]
for subset, e in idempotents(sigma, 2):
    print("idempotent", [i + 1 for i in subset], {str(k): str(v) for k, v in sorted(e.items())})
