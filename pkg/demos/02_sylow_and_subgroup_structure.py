"""Sylow subgroups, subgroup lattices, and p-group structure.

Shows the normalizer-ascent Sylow construction, full lattices for small
groups, Frattini subgroups, the hyperplane description of the maximal
subgroups of a p-group, and the generator-number families.
"""

from grouplab import (
    all_subgroups,
    all_sylow_subgroups,
    elementary_abelian,
    frattini_p_group,
    maximal_subgroups_of_p_group,
    md_families,
    minimal_normal_subgroups,
    normal_subgroups,
    o_p,
    o_p_prime,
    p_residual,
    smallest_generator_number,
    symmetric,
    sylow_subgroup,
)

S4 = symmetric(4)
print("|S4| = 24 = 2^3 * 3")
print("Sylow 2-subgroup order:", sylow_subgroup(S4, 2).order())
print("number of Sylow 3-subgroups:", all_sylow_subgroups(S4, 3).count)
print("O_2(S4) order:", o_p(S4, 2).order(), " O_{2'}(S4) order:", o_p_prime(S4, 2).order())
print("O^2(S4) order:", p_residual(S4, 2).order(), "(the alternating subgroup)")

print("\nS4 has", len(all_subgroups(S4)), "subgroups")
print("normal subgroup orders:", sorted(N.order() for N in normal_subgroups(S4)))
print("minimal normal subgroups:", [N.order() for N in minimal_normal_subgroups(S4)])

# For a p-group, the maximal subgroups are the preimages of the hyperplanes
# of the elementary abelian quotient by the Frattini subgroup.
P = sylow_subgroup(S4, 2)  # dihedral of order 8
print("\nFrattini subgroup of the Sylow 2-subgroup:", frattini_p_group(P).order())
print("its maximal subgroups:", [M.order() for M in maximal_subgroups_of_p_group(P)])
print("smallest generator number d:", smallest_generator_number(P))
fams = list(md_families(P))
print("families of d maximals meeting in the Frattini subgroup:", len(fams))

# The count that motivates working with d-element families instead of all
# maximal subgroups: an elementary abelian group of order 7^7 has 137257
# maximal subgroups but d is just 7.
E = elementary_abelian(7, 7)
print("\n|maximals| of elementary abelian 7^7:", len(maximal_subgroups_of_p_group(E)))
print("smallest generator number:", smallest_generator_number(E))
