"""The coproduct, the projector E onto primitives and the reconstruction formula."""

from packedwords.algebra import lc, rank
from packedwords.hopf import (coproduct, eulerian_projector, is_primitive,
                              reconstruct, reduced_coproduct_power)
from packedwords.words import surjections

x = (3, 4, 2, 5, 1, 1, 3, 5)
print("Δ", x, "=")
for pair, c in coproduct(x).items():
    print("   ", pair)

print("iterated, 3 factors:", len(reduced_coproduct_power(x, 3)), "terms")

for w in [(2, 3, 1), (1, 2, 1), (2, 3, 4, 1), (2, 4, 3, 1)]:
    e = eulerian_projector(w)
    print(f"E{w} = {e}   primitive: {is_primitive(e)}")

# E kills products and x is rebuilt from E of its pieces
print("E(1,2) =", eulerian_projector((1, 2)))
print("reconstruct (2,1,3) == (2,1,3):", reconstruct((2, 1, 3)) == lc((2, 1, 3)))

# dimension of the primitives, degree by degree
print("dim Prim_n:", [rank([eulerian_projector(w) for w in surjections(n)]) for n in range(1, 5)])
