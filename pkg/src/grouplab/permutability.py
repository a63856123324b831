"""Subgroup permutability predicates over exact product sets.

``HK = KH`` is decided by comparing the two product bitmasks, never by an
order shortcut; the independent "is HK closed" computation is cross-asserted
against the equality check on every call, as a guard against engine bugs.

Predicate results are cached per (parent, element-set mask): the theorem
harness evaluates the same maximal subgroups many times.  Caching is
transparent because every predicate is a pure function of the two element
sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DEFAULT_LATTICE_CAP, LatticeCapError
from .groups import ElementSet, Group, mask_from_indices
from .structure import all_subgroups, all_sylow_subgroups, primes_of


@dataclass
class ProductSetResult:
    """The two product sets of a pair of subgroups of a common parent."""

    hk: ElementSet
    kh: ElementSet
    equal: bool
    is_subgroup: bool
    cardinality: int


def product_set(G: Group, H: Group, K: Group) -> ProductSetResult:
    """Exact product sets {hk} and {kh} inside G.

    ``equal`` and ``is_subgroup`` are computed independently and must agree
    (HK = KH iff HK is a subgroup); |HK| = |H||K|/|H ∩ K| is asserted.
    """
    n = G.order()
    tbl = G.table()
    hidx = G.indices_of(H)
    kidx = G.indices_of(K)
    if tbl is not None:
        hk_idx = np.unique(tbl[np.ix_(hidx, kidx)])
        kh_idx = np.unique(tbl[np.ix_(kidx, hidx)])
        hk_mask = mask_from_indices(hk_idx, n)
        kh_mask = mask_from_indices(kh_idx, n)
    else:
        helems = H.elements()
        kelems = K.elements()
        hk_set = {G.element_index(h * k) for h in helems for k in kelems}
        kh_set = {G.element_index(k * h) for h in helems for k in kelems}
        hk_mask = mask_from_indices(np.fromiter(hk_set, dtype=np.int64), n)
        kh_mask = mask_from_indices(np.fromiter(kh_set, dtype=np.int64), n)
    hmask = mask_from_indices(hidx, n)
    kmask = mask_from_indices(kidx, n)
    inter = (hmask & kmask).bit_count()
    expected = H.order() * K.order() // inter
    if hk_mask.bit_count() != expected or kh_mask.bit_count() != expected:
        raise AssertionError("|HK| != |H||K|/|H∩K|: product set engine bug")
    hk = ElementSet(G, hk_mask)
    kh = ElementSet(G, kh_mask)
    equal = hk_mask == kh_mask
    closed = hk.is_subgroup_set()
    if equal != closed:
        raise AssertionError("HK = KH inconsistent with HK being a subgroup")
    return ProductSetResult(
        hk=hk, kh=kh, equal=equal, is_subgroup=closed, cardinality=expected
    )


def _cached_predicate(G: Group, tag: str, H: Group, fn) -> bool:
    key = (tag, G.mask_of(H))
    hit = G.cache.get(key)
    if hit is None:
        hit = fn()
        G.cache[key] = hit
    return hit


def is_s_permutable(G: Group, H: Group) -> bool:
    """H permutes with every Sylow q-subgroup of G, for every prime q."""

    def compute() -> bool:
        for q in primes_of(G):
            for Q in all_sylow_subgroups(G, q).all:
                if not product_set(G, H, Q).equal:
                    return False
        return True

    return _cached_predicate(G, "s-perm", H, compute)


def is_s_semipermutable(G: Group, H: Group) -> bool:
    """H permutes with every Sylow q-subgroup for every prime q not
    dividing |H|."""

    def compute() -> bool:
        h_order = H.order()
        for q in primes_of(G):
            if h_order % q == 0:
                continue
            for Q in all_sylow_subgroups(G, q).all:
                if not product_set(G, H, Q).equal:
                    return False
        return True

    return _cached_predicate(G, "s-semiperm", H, compute)


def is_semipermutable(
    G: Group, H: Group, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> bool:
    """H permutes with every subgroup of coprime order.

    Needs the full subgroup lattice; above the lattice cap this raises
    rather than approximating (even when a cached value exists, so cap
    behavior does not depend on call history).
    """
    if G.order() > lattice_cap:
        raise LatticeCapError(
            f"group of order {G.order()} exceeds the subgroup-lattice cap "
            f"{lattice_cap}",
            cap=lattice_cap,
            size=G.order(),
        )

    def compute() -> bool:
        h_order = H.order()
        for K in all_subgroups(G, lattice_cap):
            if math.gcd(h_order, K.order()) == 1 and not product_set(G, H, K).equal:
                return False
        return True

    return _cached_predicate(G, "semiperm", H, compute)
