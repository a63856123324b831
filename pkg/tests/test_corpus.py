import math
import random

import pytest

from grouplab.corpus import (
    alternating,
    builtin_corpus,
    corpus_manifest,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    named_group,
    parse_group_file,
    quaternion8,
    symmetric,
    write_group_file,
)
from grouplab.errors import CycleFormatError


@pytest.mark.parametrize(
    "maker,order,degree",
    [
        (lambda: cyclic(1), 1, 1),
        (lambda: cyclic(12), 12, 12),
        (lambda: dihedral(8), 8, 4),
        (lambda: dihedral(4), 4, 4),
        (lambda: symmetric(4), 24, 4),
        (lambda: symmetric(2), 2, 2),
        (lambda: alternating(5), 60, 5),
        (lambda: alternating(3), 3, 3),
        (lambda: quaternion8(), 8, 8),
        (lambda: elementary_abelian(7, 7), 7**7, 49),
        (lambda: elementary_abelian(2, 3), 8, 6),
    ],
)
def test_construction_orders(maker, order, degree):
    G = maker()
    assert G.order() == order
    assert G.degree == degree


def test_quaternion_is_quaternion():
    q8 = quaternion8()
    assert q8.order() == 8
    invols = [x for x in q8.elements() if x.order() == 2]
    assert len(invols) == 1
    # not dihedral/abelian: exactly 6 elements of order 4
    assert sum(1 for x in q8.elements() if x.order() == 4) == 6


def test_dihedral_is_dihedral():
    for n in (3, 5, 8):
        D = dihedral(2 * n)
        assert D.order() == 2 * n
        assert sum(1 for x in D.elements() if x.order() == n) > 0


def test_direct_product(s3):
    assert direct_product(s3, s3).order() == 36
    assert direct_product(cyclic(2), cyclic(3)).order() == 6
    T = direct_product(s3, cyclic(1))
    assert T.order() == 6 and T.degree == 4
    # C2 x C3 is cyclic of order 6
    G = direct_product(cyclic(2), cyclic(3))
    assert max(x.order() for x in G.elements()) == 6


def test_builtin_corpus_contents():
    names24 = {ng.name for ng in builtin_corpus(24)}
    for need in ("S4", "A4", "D8", "Q8", "C6"):
        assert need in names24
    assert "S5" not in names24
    assert [ng.name for ng in builtin_corpus(1)] == ["C1"]


def test_builtin_corpus_deterministic_and_orders():
    a = builtin_corpus(60)
    b = builtin_corpus(60)
    assert [ng.name for ng in a] == [ng.name for ng in b]
    for ng in a:
        assert ng.group.order() <= 60
    # sorted by (order, name)
    keys = [(ng.group.order(), ng.name) for ng in a]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_builtin_corpus_golden_counts():
    # frozen after one oracle run of the construction grammar
    assert len(builtin_corpus(200)) == 981
    assert len(builtin_corpus(120)) == 677
    assert len(builtin_corpus(60)) == 364


def test_named_group_round_trips():
    for name in ("S4", "A5", "D16", "Q8", "C7^2", "S3xS3", "C2xC3"):
        ng = named_group(name)
        assert ng.name == name
        assert ng.group.order() > 1
    assert named_group("C7^7").group.order() == 7**7
    with pytest.raises(ValueError):
        named_group("X99")


def test_group_file_round_trip_random_corpus():
    rng = random.Random(2024)
    sample = rng.sample(builtin_corpus(120), 50)
    for ng in sample:
        text = write_group_file(ng)
        gf = parse_group_file(text)
        assert gf.name == ng.name
        G2 = gf.to_group()
        assert G2.same_elements(ng.group)


def test_group_file_parsing():
    gf = parse_group_file(
        """
        # a comment
        name: demo
        degree: 3
        gen: (1 2)
        gen: (1 2 3)
        """
    )
    assert gf.to_group().order() == 6
    assert parse_group_file("name: t\ndegree: 5\ngen: ()\n").to_group().order() == 1
    gf_img = parse_group_file("name: t\ndegree: 3\ngen-images: 2 3 1\n")
    assert gf_img.to_group().order() == 3


@pytest.mark.parametrize(
    "text",
    [
        "degree: 3\ngen: (1 2)\n",  # missing name
        "name: x\ngen: (1 2)\n",  # missing degree
        "name: x\ndegree: 3\ngen: (1 2)(2 3)\n",  # repeated point
        "name: x\ndegree: 3\ngen: (1 4)\n",  # out of range
        "name: x\ndegree: 3\ngen: (1 2\n",  # malformed cycle
        "name: x\ndegree: 3\nfoo: bar\n",  # unknown key
        "name: x\ndegree: 3\ngen-images: 1 1 2\n",  # not a bijection
    ],
)
def test_group_file_errors(text):
    with pytest.raises(CycleFormatError):
        parse_group_file(text)


def test_corpus_orders_match_formula():
    for ng in builtin_corpus(48):
        name, order = ng.name, ng.group.order()
        if name.startswith("C") and "^" not in name and "x" not in name:
            assert order == int(name[1:])
        elif name.startswith("D") and "x" not in name:
            assert order == int(name[1:])
        elif name.startswith("S") and "x" not in name:
            n = int(name[1:])
            assert order == math.factorial(n)


def test_manifest():
    corpus = builtin_corpus(12)
    text = corpus_manifest(corpus)
    lines = text.strip().splitlines()
    assert lines[0].startswith("#")
    assert len(lines) == len(corpus) + 1
    name, order, degree = lines[1].split()
    assert int(order) >= 1 and int(degree) >= 1
