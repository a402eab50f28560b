"""Generator sets D and B, normal forms, eta and psi, and the rank checks."""

from packedwords.algebra import rank
from packedwords.freeness import (brace_normal_form, enumerate_bases, eta,
                                  freeness_report, gv_normal_form, psi)

tables = enumerate_bases(4)
for n in range(1, 5):
    print(n, tables.counts(n))
print("D_3:", tables.D[3])
print("B_3:", tables.B[3])

# every irreducible word is a unique tree over the generators
for w in [(2, 1), (3, 1, 2), (1, 1), (2, 1, 2)]:
    print(w, "brace form:", brace_normal_form(w), "  GV form:", gv_normal_form(w))

print("eta(2,1)   =", eta((2, 1)))
print("psi(2,1,2) =", psi((2, 1, 2)))
print("psi(2,1,2) at q=0 =", psi((2, 1, 2), 0))

# full rank means the maps are injective in that degree
irr = tables.irr[4]
print("rank eta on Irr_4:", rank([eta(x) for x in irr]), "of", len(irr))
print("rank psi on Irr_4 (symbolic q):", rank([psi(x) for x in irr]))

report = freeness_report(3)
print("report n=3:", report["ranks"], "pass:", report["pass"])
