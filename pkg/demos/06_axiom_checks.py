"""Exhaustive axiom suites, and what happens when a product is broken."""

from packedwords.hopf import perturbed_family
from packedwords.suites import axiom_suite

for name in ("dendriform", "tridendriform", "bialgebra", "infinitesimal",
             "brace", "gv", "order", "shuffle-sets"):
    print(axiom_suite(name, 4))

# drop the merged map (1,1) from the middle product of two letters
broken = perturbed_family("merged", (1, 1), drop=[(1, 1)])
print(axiom_suite("tridendriform", 4, broken))

# add a stray map to the right product of (2,2)
broken = perturbed_family("right", (2, 2), add=[(2, 3, 1, 2)])
print(axiom_suite("tridendriform", 4, broken))
