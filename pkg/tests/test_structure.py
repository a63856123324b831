
import pytest

import naive
from grouplab.corpus import (
    builtin_corpus,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion8,
    symmetric,
)
from grouplab.errors import LatticeCapError, NotAPGroupError
from grouplab.groups import is_normal, normalizer, subgroup_generated
from grouplab.perms import Permutation
from grouplab.structure import (
    all_subgroups,
    all_sylow_subgroups,
    frattini_p_group,
    is_complemented,
    is_hall,
    maximal_subgroups_of_p_group,
    md_families,
    minimal_normal_subgroups,
    normal_subgroups,
    o_p,
    o_p_prime,
    p_part,
    p_residual,
    smallest_generator_number,
    sylow_subgroup,
)

P = Permutation.parse


def test_sylow_orders(s4, s3):
    assert sylow_subgroup(s4, 2).order() == 8
    assert sylow_subgroup(s4, 3).order() == 3
    assert sylow_subgroup(s3, 5).is_trivial
    E = elementary_abelian(7, 7)
    assert sylow_subgroup(E, 7) is E  # p-group shortcut


def test_sylow_counts(s4, a4):
    assert all_sylow_subgroups(s4, 3).count == 4
    assert all_sylow_subgroups(s4, 2).count == 3
    assert all_sylow_subgroups(a4, 2).count == 1


def test_sylow_congruences_over_corpus():
    for ng in builtin_corpus(48):
        G = ng.group
        for p in {2, 3, 5, 7} & set(naive.prime_factors(G.order())):
            sys_p = all_sylow_subgroups(G, p)
            assert sys_p.representative.order() == p_part(G.order(), p)
            assert sys_p.count % p == 1
            assert (G.order() // sys_p.representative.order()) % sys_p.count == 0


@pytest.mark.parametrize(
    "maker,count",
    [
        (lambda: symmetric(3), 6),
        (lambda: symmetric(4), 30),
        (lambda: __import__("grouplab.corpus", fromlist=["alternating"]).alternating(4), 10),
        (lambda: quaternion8(), 6),
        (lambda: dihedral(8), 10),
    ],
)
def test_golden_lattice_counts(maker, count):
    # each golden value confirmed against the naive layered-closure oracle
    G = maker()
    subs = all_subgroups(G)
    assert len(subs) == count
    oracle = naive.all_subgroups(G.degree, naive.closure(G.degree, G.generators))
    assert len(oracle) == count
    assert {frozenset(H.elements()) for H in subs} == oracle


def test_cyclic_prime_has_two_subgroups():
    assert len(all_subgroups(cyclic(7))) == 2


def test_lattice_cap():
    G = cyclic(30)
    with pytest.raises(LatticeCapError):
        all_subgroups(G, lattice_cap=10)


def test_normal_subgroups(s4, a5):
    assert sorted(H.order() for H in normal_subgroups(s4)) == [1, 4, 12, 24]
    assert sorted(H.order() for H in normal_subgroups(a5)) == [1, 60]
    # abelian: all subgroups are normal
    C12 = cyclic(12)
    assert len(normal_subgroups(C12)) == len(all_subgroups(C12))


def test_minimal_normal_subgroups(s4, c6, a5):
    assert [H.order() for H in minimal_normal_subgroups(s4)] == [4]
    assert sorted(H.order() for H in minimal_normal_subgroups(c6)) == [2, 3]
    assert [H.order() for H in minimal_normal_subgroups(a5)] == [60]


def test_frattini(d8):
    assert frattini_p_group(elementary_abelian(3, 2)).is_trivial
    phi = frattini_p_group(d8)
    assert phi.order() == 2
    assert frattini_p_group(cyclic(8)).order() == 4
    with pytest.raises(NotAPGroupError):
        frattini_p_group(cyclic(6))


def test_frattini_matches_maximal_intersection():
    # two independent computations of the same subgroup
    for G in (dihedral(8), quaternion8(), cyclic(8), elementary_abelian(2, 3), dihedral(16)):
        phi = frattini_p_group(G)
        E = naive.closure(G.degree, G.generators)
        assert frozenset(phi.elements()) == naive.frattini(G.degree, E)


def test_maximal_subgroups_counts(d8):
    ms = maximal_subgroups_of_p_group(d8)
    assert len(ms) == 3
    assert sorted(m.order() for m in ms) == [4, 4, 4]
    assert [m.order() for m in maximal_subgroups_of_p_group(cyclic(5))] == [1]
    E = elementary_abelian(3, 3)
    assert len(maximal_subgroups_of_p_group(E)) == (3**3 - 1) // (3 - 1)


def test_maximal_subgroups_are_maximal(d8):
    oracle = naive.maximal_subgroups(4, naive.closure(4, d8.generators))
    computed = {frozenset(m.elements()) for m in maximal_subgroups_of_p_group(d8)}
    assert computed == oracle


def test_smallest_generator_number(d8):
    assert smallest_generator_number(elementary_abelian(7, 7)) == 7
    assert smallest_generator_number(cyclic(9)) == 1
    assert smallest_generator_number(cyclic(8)) == 1
    assert smallest_generator_number(d8) == 2


def test_md_families_d8(d8):
    fams = list(md_families(d8))
    assert len(fams) == 3
    phi = frattini_p_group(d8)
    for fam in fams:
        assert fam.d == 2 and len(fam.members) == 2
        inter = frozenset(fam.members[0].elements()) & frozenset(
            fam.members[1].elements()
        )
        assert inter == frozenset(phi.elements())
    oracle = naive.md_families(4, naive.closure(4, d8.generators))
    assert len(oracle) == 3


def test_md_families_c_p():
    fams = list(md_families(cyclic(5)))
    assert len(fams) == 1
    assert fams[0].members[0].is_trivial


def test_md_families_elementary_abelian_p2():
    for p in (2, 3, 5):
        E = elementary_abelian(p, 2)
        fams = list(md_families(E))
        assert len(fams) == (p + 1) * p // 2


def test_md_families_canonical_first_and_deterministic(d8):
    first = next(iter(md_families(d8)))
    second = next(iter(md_families(d8)))
    key = lambda fam: [sorted(m.elements()) for m in fam.members]
    assert key(first) == key(second)
    # limit bounds enumeration
    assert len(list(md_families(elementary_abelian(2, 3), limit=4))) == 4


def test_op_and_residuals(s4, c6):
    assert o_p(s4, 2).order() == 4
    assert o_p_prime(s4, 2).order() == 1
    assert p_residual(c6, 2).order() == 3
    assert p_residual(c6, 3).order() == 2
    assert p_residual(s4, 2).order() == 12  # A4
    # o_p is the largest normal p-subgroup
    for G in (s4, c6, dihedral(12)):
        for p in naive.prime_factors(G.order()):
            core = o_p(G, p)
            assert is_normal(G, core)
            best = max(
                (
                    H.order()
                    for H in normal_subgroups(G)
                    if H.order() == p_part(H.order(), p)
                ),
                default=1,
            )
            assert core.order() == best
    # o_p_prime dually
    for G in (s4, c6, dihedral(12)):
        for p in naive.prime_factors(G.order()):
            co = o_p_prime(G, p)
            assert is_normal(G, co)
            best = max(
                H.order() for H in normal_subgroups(G) if H.order() % p != 0
            )
            assert co.order() == best


def test_p_residual_is_smallest_with_p_quotient(s4):
    R = p_residual(s4, 2)
    assert is_normal(s4, R)
    # quotient order is the 2-part
    assert (s4.order() // R.order()) == p_part(s4.order() // R.order(), 2)
    # no smaller normal subgroup has p-power quotient
    for H in normal_subgroups(s4):
        q = s4.order() // H.order()
        if q == p_part(q, 2):
            assert H.order() >= R.order()


def test_is_hall(s4):
    assert is_hall(s4, sylow_subgroup(s4, 2))
    assert is_hall(s4, subgroup_generated(s4, []))
    assert not is_hall(s4, subgroup_generated(s4, [P(4, "(1 2)")]))


def test_is_complemented(a4, q8):
    V = subgroup_generated(a4, [P(4, "(1 2)(3 4)"), P(4, "(1 3)(2 4)")])
    ok, K = is_complemented(a4, V)
    assert ok and K.order() == 3
    center_q8 = subgroup_generated(q8, [q8.elements()[1]])  # unique involution
    assert center_q8.order() == 2
    ok, K = is_complemented(q8, center_q8)
    assert not ok and K is None


def test_normalizer_of_sylow(s4):
    P3 = sylow_subgroup(s4, 3)
    assert normalizer(s4, P3).order() == 6
