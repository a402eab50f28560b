"""Brace operations built from the dendriform pair, and the q-distributive law."""

from packedwords.hopf import ST, OpFamily, brace, eulerian_projector, is_primitive
from packedwords.suites import brace_relation_gap, gv_distributivity_gap

one = (1,)
print("M11((1);(1))       =", brace(one, [one]))
print("M11((1);(1)) at q=0 =", brace(one, [one], 0))
print("M12((1);(1),(1))    =", brace(one, [one, one], 0))

# braces of primitives stay primitive
E = eulerian_projector
b = brace(E((2, 1)), [E((1, 1)), E((1,))])
print("brace of primitives is primitive:", is_primitive(b))

# composition of braces, and distributivity over the middle product
print("brace relation gap:", brace_relation_gap(ST, (1,), ((1,),), ((1,), (1, 1))))
print("distributivity gap:", gv_distributivity_gap(ST, (1,), (2, 1), ((1,), (1,))))

# a specialized family behaves the same way
F = OpFamily(-1)
print("q=-1 distributivity gap:", gv_distributivity_gap(F, (1,), (1,), ((1,),)))
