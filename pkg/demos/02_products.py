"""Shuffle, dendriform and q-tridendriform products, symbolic and specialized."""

from packedwords.hopf import ST, dendriform, shuffle_product, tridendriform
from packedwords.shuffles import enumerate_shuffles, enumerate_stuffles, epsilon

# the relabelling maps behind the products
print("Sh>(2,2):", enumerate_shuffles((2, 2), "right"))
print("SH.(2,2):", [(s.map, s.defect) for s in enumerate_stuffles((2, 2), "merged")])
print("epsilon(2,1) =", epsilon(2, 1))

x, y = (2, 1, 1), (1, 2)

# q stays symbolic by default
for which in ("right", "middle", "left"):
    print(f"{which:>6}:", tridendriform(x, y, which))

# the weak product and the associative product
print("  weak:", ST.weak(x, y))
print("  star:", ST.star(x, y))

# at q = 0 the weak product and < are the shuffle pair
print("q=0 weak :", tridendriform(x, y, "weak-right", 0))
print("shuffle >:", dendriform(x, y, "right"))
print("x * y    :", shuffle_product(x, y))

# any integer q gives a specialization
print("middle at q=2:", tridendriform(x, y, "middle", 2))
