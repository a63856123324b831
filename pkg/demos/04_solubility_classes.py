"""Chief series and the solubility-class predicates built on them."""

from grouplab import (
    alternating,
    chief_series,
    cyclic,
    direct_product,
    is_nilpotent,
    is_p_nilpotent,
    is_p_soluble,
    is_p_supersoluble,
    is_soluble,
    is_supersoluble,
    quaternion8,
    symmetric,
)

S4 = symmetric(4)
cs = chief_series(S4)
print("chief series of S4, orders:", [g.order() for g in cs.chain])
print("chief factor orders (top down):", cs.factor_orders)
print("S4 supersoluble:", is_supersoluble(S4), "(a factor of order 4 blocks it)")
print("S4 soluble:", is_soluble(S4))

A5 = alternating(5)
print("\nA5 chief factors:", chief_series(A5).factor_orders, " soluble:", is_soluble(A5))

A4 = alternating(4)
print("\nA4: 3-supersoluble:", is_p_supersoluble(A4, 3), " 2-supersoluble:", is_p_supersoluble(A4, 2))

G = direct_product(symmetric(3), symmetric(3))
print("S3 x S3 chief factors:", sorted(chief_series(G).factor_orders))
print("S3 x S3 2-supersoluble:", is_p_supersoluble(G, 2))

print("\nQ8 x C3 nilpotent:", is_nilpotent(direct_product(quaternion8(), cyclic(3))))
print("S3 2-nilpotent:", is_p_nilpotent(symmetric(3), 2), "(the rotation subgroup is a normal 2-complement)")
print("S4 2-nilpotent:", is_p_nilpotent(S4, 2))
print("A5 2-soluble:", is_p_soluble(A5, 2))
