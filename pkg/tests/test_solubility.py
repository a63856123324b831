import naive
from grouplab.corpus import (
    builtin_corpus,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    symmetric,
)
from grouplab.solubility import (
    chief_series,
    derived_subgroup,
    is_nilpotent,
    is_p_nilpotent,
    is_p_soluble,
    is_p_supersoluble,
    is_soluble,
    is_supersoluble,
)
from grouplab.structure import primes_of


def test_chief_series_s4(s4):
    cs = chief_series(s4)
    assert cs.factor_orders == [2, 3, 4]
    orders = [g.order() for g in cs.chain]
    assert orders == [24, 12, 4, 1]
    # every chain member is normal in G
    from grouplab.groups import is_normal

    for H in cs.chain:
        assert is_normal(s4, H)


def test_chief_series_edge_cases(a5):
    assert chief_series(cyclic(7)).factor_orders == [7]
    assert chief_series(a5).factor_orders == [60]
    assert chief_series(cyclic(1)).factor_orders == []


def test_jordan_holder_factor_multiset():
    for G in (symmetric(4), dihedral(24), direct_product(symmetric(3), cyclic(4)), quaternion8()):
        first = chief_series(G, pick="first").factor_orders
        last = chief_series(G, pick="last").factor_orders
        assert sorted(first) == sorted(last)
        assert len(first) == len(last)


def test_soluble(s4, a5):
    assert is_soluble(s4)
    assert not is_soluble(a5)
    assert is_soluble(cyclic(1))
    # derived series of A5 stabilizes at A5
    assert derived_subgroup(a5).order() == 60


def test_soluble_agrees_with_chief_characterization(a5, s5):
    groups = [ng.group for ng in builtin_corpus(30)] + [a5, s5]
    for G in groups:
        via_chief = all(
            len(naive.prime_factors(f)) == 1  # prime-power chief factors
            for f in chief_series(G).factor_orders
        )
        assert is_soluble(G) == via_chief


def test_nilpotent(q8):
    assert is_nilpotent(q8)
    assert is_nilpotent(direct_product(quaternion8(), cyclic(3)))
    assert not is_nilpotent(symmetric(3))


def test_supersoluble(s4, q8):
    assert not is_supersoluble(s4)
    assert is_supersoluble(q8)
    assert is_supersoluble(cyclic(12))
    assert is_supersoluble(symmetric(3))


def test_p_soluble_p_supersoluble(a4, s3s3, a5):
    assert is_p_supersoluble(a4, 3)
    assert not is_p_supersoluble(a4, 2)
    assert is_p_supersoluble(s3s3, 2)
    assert is_p_soluble(a4, 2) and is_p_soluble(a4, 3)
    assert not is_p_soluble(a5, 2)
    assert not is_p_soluble(a5, 3)


def test_p_nilpotent(s3, s4, q8):
    assert is_p_nilpotent(s3, 2)
    assert not is_p_nilpotent(s4, 2)
    assert is_p_nilpotent(q8, 2)
    assert not is_p_nilpotent(s3, 3)


def test_class_implication_chain_over_corpus():
    for ng in builtin_corpus(36):
        G = ng.group
        if G.order() == 1:
            continue
        nil, sup, sol = is_nilpotent(G), is_supersoluble(G), is_soluble(G)
        if nil:
            assert sup
        if sup:
            assert sol
        for p in primes_of(G):
            psup, psol = is_p_supersoluble(G, p), is_p_soluble(G, p)
            if psup:
                assert psol
            if sup:
                assert psup


def test_smallest_prime_p_supersoluble_implies_p_nilpotent():
    # the applications section's opening remark, as a corpus property
    checked = 0
    for ng in builtin_corpus(60):
        G = ng.group
        if G.order() == 1:
            continue
        p = primes_of(G)[0]
        if is_p_supersoluble(G, p):
            assert is_p_nilpotent(G, p)
            checked += 1
    assert checked > 40


def test_predicates_match_naive_oracle():
    for ng in builtin_corpus(24):
        G = ng.group
        if G.order() == 1:
            continue
        E = naive.closure(G.degree, G.generators)
        assert is_supersoluble(G) == naive.is_supersoluble(G.degree, E)
        for p in primes_of(G):
            assert is_p_nilpotent(G, p) == naive.is_p_nilpotent(G.degree, E, p)
