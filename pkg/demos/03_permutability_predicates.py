"""The permutability predicates over exact product sets.

HK = KH is decided by comparing the two product bitmasks; the subgroup
test on HK is computed independently and cross-asserted.  The three
predicate strengths are genuinely different, witnessed inside S3 and A4.
"""

from grouplab import (
    Permutation,
    alternating,
    is_s_permutable,
    is_s_semipermutable,
    is_semipermutable,
    product_set,
    subgroup_generated,
    symmetric,
)

S3 = symmetric(3)
H = subgroup_generated(S3, [Permutation.parse(3, "(1 2)")])
K = subgroup_generated(S3, [Permutation.parse(3, "(1 2 3)")])
r = product_set(S3, H, K)
print("|<(1 2)> <(1 2 3)>| =", r.cardinality, " HK = KH:", r.equal)

K2 = subgroup_generated(S3, [Permutation.parse(3, "(1 3)")])
r2 = product_set(S3, H, K2)
print("|<(1 2)> <(1 3)>| =", r2.cardinality, " HK = KH:", r2.equal, "(4 does not divide 6)")

# The separation: a transposition permutes with the Sylow 3-subgroup
# (s-semipermutable) but not with the other Sylow 2-subgroups.
print("\n<(1 2)> in S3:")
print("  s-permutable:     ", is_s_permutable(S3, H))
print("  s-semipermutable: ", is_s_semipermutable(S3, H))
print("  semipermutable:   ", is_semipermutable(S3, H))

# In A4 an order-2 subgroup fails even s-semipermutability: its product
# with a Sylow 3-subgroup would be a subgroup of order 6, which A4 lacks.
A4 = alternating(4)
H2 = subgroup_generated(A4, [Permutation.parse(4, "(1 2)(3 4)")])
print("\norder-2 subgroup of A4 s-semipermutable:", is_s_semipermutable(A4, H2))

# Normal subgroups permute with everything.
V = subgroup_generated(
    symmetric(4),
    [Permutation.parse(4, "(1 2)(3 4)"), Permutation.parse(4, "(1 3)(2 4)")],
)
print("Klein group s-permutable in S4:", is_s_permutable(symmetric(4), V))
