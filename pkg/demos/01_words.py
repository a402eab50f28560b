"""Packed words: standardization, the three products, decompositions, Bruhat order."""

from packedwords.words import (backslash, bruhat_covers, bruhat_leq, bruhat_lt,
                               canonical_dot_factorization, concat, dot,
                               gap_vector, irreducible_factorization,
                               standardize, surjections, top_decomposition,
                               value_split)

# any word of positive integers has a packed shape
print("std(1,5,4,7,5) =", standardize((1, 5, 4, 7, 5)))

# how many packed words of each length
print("|ST_n|, n=1..6:", [len(surjections(n)) for n in range(1, 7)])

# concatenation shifts the second word up
x, y = (2, 1, 1), (1, 2)
print("x × y =", concat(x, y))
print("(3,4,1,2) \\ (1) =", backslash((3, 4, 1, 2), (1,)))

# the dot product glues the maximal values
w = dot(dot((2, 3, 4, 1, 3), (1, 2)), (1, 2, 3, 1))
print("dot chain:", w)
print("  canonical factors:", canonical_dot_factorization(w))

# irreducible factors under ×
print("factors of (1,3,2,4):", irreducible_factorization((1, 3, 2, 4)))

# the maximal value and the gaps around it
x = (3, 1, 2, 5, 1, 4, 3, 5, 4, 2)
print("tops of", x, "->", top_decomposition(x))
print("gap vector:", gap_vector(x))

# value cuts
print("(2,3,1) cut at 2:", value_split((2, 3, 1), (2,)))

# weak Bruhat order: swap i and i+1 when every i comes first
a, b, c = (1, 4, 1, 3, 4, 2), (2, 4, 2, 3, 4, 1), (1, 3, 1, 4, 3, 2)
print(a, "<", b, ":", bruhat_lt(a, b))
print(a, "vs", c, "comparable:", bruhat_leq(a, c) or bruhat_leq(c, a))
print("covers of (1,1,2,3):", bruhat_covers((1, 1, 2, 3)))
