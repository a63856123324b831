"""Solubility-class predicates via chief series.

A chief series is built from the bottom: the canonically first minimal
normal subgroup of the current quotient is pulled back through the coset
map, so every factor is a genuine chief factor of the whole group by
construction.  Factor orders are reported from the top.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    Group,
    is_normal,
    mask_from_indices,
    normal_closure,
    quotient,
    subgroup_generated,
)
from .structure import (
    minimal_normal_subgroups,
    o_p_prime,
    p_part,
    primes_of,
    sylow_subgroup,
)


@dataclass
class ChiefSeries:
    """Descending chain G = N_0 > N_1 > ... > N_k = 1 of normal-in-G
    subgroups with chief factors N_{i-1}/N_i."""

    group: Group
    chain: list[Group]
    factor_orders: list[int]


def chief_series(G: Group, pick: str = "first") -> ChiefSeries:
    """Chief series of G; ``pick`` selects which minimal normal subgroup of
    the running quotient is used ("first" or "last" in canonical order),
    which by Jordan-Hölder cannot change the factor-order multiset."""
    key = ("chief", pick)
    cached = G.cache.get(key)
    if cached is not None:
        return cached
    n = G.order()
    proj = np.arange(n, dtype=np.int64)  # element index -> current quotient index
    Q = G
    bottom_masks: list[int] = [1]
    while Q.order() > 1:
        minimals = minimal_normal_subgroups(Q)
        M = minimals[0] if pick == "first" else minimals[-1]
        qbits = np.zeros(Q.order(), dtype=bool)
        qbits[Q.indices_of(M)] = True
        bottom_masks.append(mask_from_indices(np.nonzero(qbits[proj])[0], n))
        cm = quotient(Q, M)
        proj = cm.projection_indices()[proj]
        Q = cm.quotient
    chain = [G.subgroup_from_mask(m) for m in reversed(bottom_masks)]
    orders = [g.order() for g in chain]
    factors = [orders[i] // orders[i + 1] for i in range(len(orders) - 1)]
    series = ChiefSeries(group=G, chain=chain, factor_orders=factors)
    G.cache[key] = series
    return series


def derived_subgroup(G: Group) -> Group:
    comms = []
    for i, a in enumerate(G.generators):
        for b in G.generators[i:]:
            comms.append(a.inverse() * b.inverse() * a * b)
    return normal_closure(G, subgroup_generated(G, comms))


def is_soluble(G: Group) -> bool:
    """The derived series reaches the trivial group."""
    hit = G.cache.get("soluble")
    if hit is None:
        cur = G
        while True:
            if cur.order() == 1:
                hit = True
                break
            nxt = derived_subgroup(cur)
            if nxt.order() == cur.order():
                hit = False
                break
            cur = nxt
        G.cache["soluble"] = hit
    return hit


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup is normal."""
    hit = G.cache.get("nilpotent")
    if hit is None:
        hit = all(
            is_normal(G, sylow_subgroup(G, p)) for p in primes_of(G)
        )
        G.cache["nilpotent"] = hit
    return hit


def is_supersoluble(G: Group) -> bool:
    """Every chief factor has prime order."""
    from .structure import is_prime

    return all(is_prime(f) for f in chief_series(G).factor_orders)


def is_p_soluble(G: Group, p: int) -> bool:
    """Every chief factor is a p-group or a p'-group."""
    return all(
        f % p != 0 or f == p_part(f, p) for f in chief_series(G).factor_orders
    )


def is_p_supersoluble(G: Group, p: int) -> bool:
    """p-soluble with every p-chief factor of order exactly p."""
    if not is_p_soluble(G, p):
        return False
    return all(
        f == p for f in chief_series(G).factor_orders if f % p == 0
    )


def is_p_nilpotent(G: Group, p: int) -> bool:
    """A normal Hall p'-subgroup exists."""
    return o_p_prime(G, p).order() == G.order() // p_part(G.order(), p)
