"""Structural subgroup machinery.

Sylow subgroups are built by normalizer ascent so they scale past the
subgroup-lattice cap; the full lattice (layered closure over cyclic
subgroups) and normal subgroups (join closure of conjugacy-class closures)
are independent constructions so that chief series remain available for
groups whose lattice would be too expensive.

Maximal subgroups of a p-group P are the preimages of the hyperplanes of
the elementary abelian quotient P/Phi(P); the generator-number d satisfies
p^d = |P/Phi(P)| and every d-subset of maximal subgroups intersecting in
Phi(P) corresponds to a linearly independent set of d linear functionals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .errors import (
    DEFAULT_FAMILY_LIMIT,
    DEFAULT_LATTICE_CAP,
    LatticeCapError,
    NotAPGroupError,
)
from .groups import (
    Group,
    _closure_indices,
    _require_subgroup,
    indices_from_mask,
    mask_from_indices,
    normal_closure,
    normalizer,
    subgroup_generated,
)
from .perms import Permutation


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def primes_of(G: Group) -> list[int]:
    return prime_factors(G.order())


# -- Sylow subgroups -----------------------------------------------------------


@dataclass
class SylowSystem:
    """One conjugacy class of Sylow p-subgroups."""

    parent: Group
    prime: int
    representative: Group
    all: list[Group]

    @property
    def count(self) -> int:
        return len(self.all)


def sylow_subgroup(G: Group, p: int) -> Group:
    """A Sylow p-subgroup, by normalizer ascent from a cyclic p-subgroup.

    Returns the trivial subgroup when p does not divide |G|.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order(), p)
    if target == 1:
        return Group(G.degree, (), G.enum_cap, G.table_cap)
    if target == G.order():
        return G
    seed = None
    for x in G.elements():
        o = x.order()
        if o % p == 0:
            seed = x ** (o // p_part(o, p))
            break
    P = subgroup_generated(G, [seed])
    while P.order() < target:
        N = normalizer(G, P)
        grown = False
        for y in N.elements():
            o = y.order()
            if o > 1 and p_part(o, p) == o and not P.contains(y):
                P = subgroup_generated(G, P.generators + (y,))
                grown = True
                break
        if not grown:  # cannot happen for a proper p-subgroup
            raise AssertionError("normalizer ascent stalled")
    return P


def all_sylow_subgroups(G: Group, p: int) -> SylowSystem:
    """The complete conjugacy class of Sylow p-subgroups."""
    key = ("sylows", p)
    cached = G.cache.get(key)
    if cached is not None:
        return cached
    rep = sylow_subgroup(G, p)
    if rep.order() == G.order() or rep.is_trivial:
        system = SylowSystem(G, p, rep, [rep])
        G.cache[key] = system
        return system
    tbl = G.table()
    seen_masks = {}
    if tbl is not None:
        cvecs = [G.conjugation_vector(G.element_index(g)) for g in G.generators]
        start = G.indices_of(rep)
        m0 = mask_from_indices(start, G.order())
        seen_masks[m0] = start
        queue = [start]
        while queue:
            idx = queue.pop(0)
            for cv in cvecs:
                conj = np.sort(cv[idx])
                m = mask_from_indices(conj, G.order())
                if m not in seen_masks:
                    seen_masks[m] = conj
                    queue.append(conj)
        groups = [
            G.subgroup_from_indices(seen_masks[m]) for m in sorted(seen_masks)
        ]
    else:
        seen = {}
        queue = [rep]
        key_of = lambda H: tuple(sorted(x.images for x in H.elements()))
        seen[key_of(rep)] = rep
        while queue:
            H = queue.pop(0)
            for g in G.generators:
                ginv = g.inverse()
                Hg = Group(
                    G.degree,
                    tuple(ginv * h * g for h in H.generators),
                    G.enum_cap,
                    G.table_cap,
                )
                k = key_of(Hg)
                if k not in seen:
                    seen[k] = Hg
                    queue.append(Hg)
        groups = [seen[k] for k in sorted(seen)]
    system = SylowSystem(G, p, rep, groups)
    G.cache[key] = system
    return system


# -- the subgroup lattice ------------------------------------------------------


def _join_subgroup_indices(
    tbl: np.ndarray, n: int, a_idx: np.ndarray, z_idx: np.ndarray, inter: int
) -> np.ndarray:
    """Indices of the join of two subgroups given by their index sets.

    Stops after the first product round when the member count equals
    |A||Z|/|A∩Z|: the product set is then already closed, which covers the
    common case of one factor normalizing the other.
    """
    expected = len(a_idx) * len(z_idx) // inter
    member = np.zeros(n, dtype=bool)
    member[a_idx] = True
    member[z_idx] = True
    frontier = z_idx[~np.isin(z_idx, a_idx, assume_unique=True)]
    first = True
    while frontier.size:
        cur = np.nonzero(member)[0]
        prods = np.unique(
            np.concatenate(
                [
                    tbl[frontier[:, None], cur].ravel(),
                    tbl[cur[:, None], frontier].ravel(),
                ]
            )
        )
        fresh = prods[~member[prods]]
        member[fresh] = True
        if first and int(member.sum()) == expected:
            break
        first = False
        frontier = fresh
    return np.nonzero(member)[0]


def lattice_masks(G: Group, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list[int]:
    """Element-set bitmasks of every subgroup of G, sorted by (order, mask).

    Built by layered closure: all cyclic subgroups, then joins of known
    subgroups with cyclic subgroups until nothing new appears.
    """
    n = G.order()
    if n > lattice_cap:
        raise LatticeCapError(
            f"group of order {n} exceeds the subgroup-lattice cap {lattice_cap}",
            cap=lattice_cap,
            size=n,
        )
    cached = G.cache.get("lattice_masks")
    if cached is not None:
        return cached
    tbl = G.table(force=True)
    cyclics = set()
    for i in range(1, n):
        idxs = [0]
        j = i
        while j != 0:
            idxs.append(j)
            j = int(tbl[j, i])
        cyclics.add(mask_from_indices(np.array(sorted(idxs), dtype=np.int64), n))
    cyclic_list = sorted(cyclics)
    idx_of = {m: indices_from_mask(m, n) for m in cyclic_list}
    idx_of[1] = np.array([0], dtype=np.int64)
    subs = {1} | cyclics
    frontier = sorted(subs)
    while frontier:
        fresh = []
        for a in frontier:
            a_idx = idx_of[a]
            for z in cyclic_list:
                if a | z == a:
                    continue
                inter = (a & z).bit_count()
                j_idx = _join_subgroup_indices(tbl, n, a_idx, idx_of[z], inter)
                j = mask_from_indices(j_idx, n)
                if j not in subs:
                    subs.add(j)
                    idx_of[j] = j_idx
                    fresh.append(j)
        frontier = fresh
    masks = sorted(subs, key=lambda m: (m.bit_count(), m))
    G.cache["lattice_masks"] = masks
    return masks


def all_subgroups(G: Group, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list[Group]:
    """Every subgroup of G exactly once (lattice cap applies)."""
    masks = lattice_masks(G, lattice_cap)
    cached = G.cache.get("lattice_groups")
    if cached is None:
        cached = [G.subgroup_from_mask(m) for m in masks]
        G.cache["lattice_groups"] = cached
    return cached


# -- normal subgroups ----------------------------------------------------------


def _conjugacy_class_indices(G: Group) -> list[np.ndarray]:
    cached = G.cache.get("classes")
    if cached is not None:
        return cached
    tbl = G.table(force=True)
    n = G.order()
    cvecs = [G.conjugation_vector(G.element_index(g)) for g in G.generators]
    seen = np.zeros(n, dtype=bool)
    classes = []
    for i in range(n):
        if seen[i]:
            continue
        member = np.zeros(n, dtype=bool)
        member[i] = True
        frontier = np.array([i], dtype=np.int64)
        while frontier.size:
            nxt = []
            for cv in cvecs:
                conj = cv[frontier]
                fresh = conj[~member[conj]]
                if fresh.size:
                    member[fresh] = True
                    nxt.append(fresh)
            frontier = np.concatenate(nxt) if nxt else np.array([], dtype=np.int64)
        cls = np.nonzero(member)[0]
        seen[cls] = True
        classes.append(cls)
    G.cache["classes"] = classes
    return classes


def _normal_atom_masks(G: Group) -> list[int]:
    """Masks of the normal closures of single conjugacy classes.  Every
    normal subgroup is a join of these and every minimal normal subgroup is
    a minimal one of these."""
    cached = G.cache.get("normal_atoms")
    if cached is not None:
        return cached
    tbl = G.table(force=True)
    n = G.order()
    atoms = []
    seen_atoms = set()
    for cls in _conjugacy_class_indices(G):
        if len(cls) == 1 and cls[0] == 0:
            continue
        m = mask_from_indices(_closure_indices(tbl, cls), n)
        if m not in seen_atoms:
            seen_atoms.add(m)
            atoms.append(m)
    atoms.sort(key=lambda m: (m.bit_count(), m))
    G.cache["normal_atoms"] = atoms
    return atoms


def normal_subgroup_masks(G: Group) -> list[int]:
    """Masks of all normal subgroups: join closure of the normal closures
    of single conjugacy classes.  Independent of the full lattice."""
    cached = G.cache.get("normal_masks")
    if cached is not None:
        return cached
    tbl = G.table(force=True)
    n = G.order()
    result = {1}
    idx_of = {1: np.array([0], dtype=np.int64)}
    for a in _normal_atom_masks(G):
        a_idx = indices_from_mask(a, n)
        additions = {}
        for r in result:
            if r | a == r:
                continue
            inter = (r & a).bit_count()
            j_idx = _join_subgroup_indices(tbl, n, idx_of[r], a_idx, inter)
            additions[mask_from_indices(j_idx, n)] = j_idx
        for m, j_idx in additions.items():
            if m not in result:
                result.add(m)
                idx_of[m] = j_idx
    masks = sorted(result, key=lambda m: (m.bit_count(), m))
    G.cache["normal_masks"] = masks
    return masks


def normal_subgroups(G: Group) -> list[Group]:
    cached = G.cache.get("normal_groups")
    if cached is None:
        cached = [G.subgroup_from_mask(m) for m in normal_subgroup_masks(G)]
        G.cache["normal_groups"] = cached
    return cached


def minimal_normal_subgroups(G: Group) -> list[Group]:
    """Nontrivial normal subgroups minimal under inclusion.

    Any nontrivial normal subgroup contains the closure of a class of one
    of its elements, so the minimal normal subgroups are exactly the
    minimal class closures; the expensive join closure is not needed.
    """
    atoms = _normal_atom_masks(G)
    minimal = [
        m for m in atoms if not any(o != m and o | m == m for o in atoms)
    ]
    return [G.subgroup_from_mask(m) for m in minimal]


# -- p-group structure ---------------------------------------------------------


def p_group_prime(P: Group) -> int:
    """The prime p for a nontrivial p-group; raises otherwise."""
    n = P.order()
    ps = prime_factors(n)
    if len(ps) != 1:
        raise NotAPGroupError(f"group of order {n} is not a p-group")
    return ps[0]


def frattini_p_group(P: Group) -> Group:
    """Phi(P) for a p-group: the normal closure of all generator
    commutators and generator p-th powers (Burnside basis theorem)."""
    if P.is_trivial:
        return P
    p = p_group_prime(P)
    cands = [g**p for g in P.generators]
    for i, a in enumerate(P.generators):
        for b in P.generators[i + 1 :]:
            cands.append(a.inverse() * b.inverse() * a * b)
    K = subgroup_generated(P, cands)
    return normal_closure(P, K)


def _p_group_frame(P: Group) -> tuple[int, Group, tuple[Permutation, ...], int]:
    """(p, Phi(P), minimal generating sequence, d) for a nontrivial p-group."""
    cached = P.cache.get("pframe")
    if cached is not None:
        return cached
    p = p_group_prime(P)
    phi = frattini_p_group(P)
    basis: list[Permutation] = []
    span = Group(P.degree, phi.generators, P.enum_cap, P.table_cap)
    for g in P.generators:
        if not span.contains(g):
            basis.append(g)
            span = Group(
                P.degree, phi.generators + tuple(basis), P.enum_cap, P.table_cap
            )
    d = 0
    q = P.order() // phi.order()
    while q > 1:
        q //= p
        d += 1
    if p**d * phi.order() != P.order() or len(basis) != d:
        raise AssertionError("Burnside basis extraction failed")
    frame = (p, phi, tuple(basis), d)
    P.cache["pframe"] = frame
    return frame


def smallest_generator_number(P: Group) -> int:
    """d with p^d = |P / Phi(P)|, the minimum size of a generating set."""
    if P.is_trivial:
        return 0
    return _p_group_frame(P)[3]


def _normalized_functionals(p: int, d: int) -> list[tuple[int, ...]]:
    """All nonzero functionals on F_p^d with first nonzero entry 1, in
    lexicographic order.  One per hyperplane."""
    out = []
    for lead in range(d - 1, -1, -1):
        for tail in product(range(p), repeat=d - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


def _maximal_data(P: Group) -> tuple[list[tuple[int, ...]], list[Group]]:
    """(functionals, maximal subgroups) of a p-group, in matching order."""
    cached = P.cache.get("pmaximals")
    if cached is not None:
        return cached
    if P.is_trivial:
        P.cache["pmaximals"] = ([], [])
        return P.cache["pmaximals"]
    p, phi, basis, d = _p_group_frame(P)
    powers = [[None] * p for _ in basis]
    for i, b in enumerate(basis):
        cur = Permutation.identity(P.degree)
        for k in range(p):
            powers[i][k] = cur
            cur = cur * b
    pair_cache: dict[tuple[int, int, int], Permutation] = {}

    def lift(j: int, lead: int, k: int) -> Permutation:
        # preimage of e_j - phi_j * e_lead, i.e. b_j * b_lead^k with k = -phi_j mod p
        if k == 0:
            return basis[j]
        key = (j, lead, k)
        g = pair_cache.get(key)
        if g is None:
            g = basis[j] * powers[lead][k]
            pair_cache[key] = g
        return g

    functionals = _normalized_functionals(p, d)
    phigens = phi.generators
    maximals = []
    for vec in functionals:
        lead = next(i for i, c in enumerate(vec) if c)
        gens = list(phigens)
        for j in range(d):
            if j == lead:
                continue
            gens.append(lift(j, lead, (p - vec[j]) % p))
        maximals.append(
            Group(P.degree, gens, P.enum_cap, P.table_cap)
        )
    P.cache["pmaximals"] = (functionals, maximals)
    return P.cache["pmaximals"]


def maximal_subgroups_of_p_group(P: Group) -> list[Group]:
    """All index-p subgroups, as hyperplane preimages; their count is
    (p^d - 1)/(p - 1)."""
    return _maximal_data(P)[1]


def _rank_mod_p(rows: list[tuple[int, ...]], p: int) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][c] % p:
                f = mat[r][c]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@dataclass
class MdFamily:
    """d maximal subgroups of a p-group whose intersection is Phi(P)."""

    p_group: Group
    d: int
    members: list[Group]
    frattini: Group


def md_families(
    P: Group, limit: int = DEFAULT_FAMILY_LIMIT
) -> Iterator[MdFamily]:
    """Families of d maximal subgroups intersecting exactly in Phi(P).

    The first family yielded is the canonical one (preimages of the
    coordinate hyperplanes for the fixed minimal basis); the rest follow in
    lexicographic order of index subsets.  ``limit`` bounds the number of
    families yielded.
    """
    if P.is_trivial:
        return
    p, phi, basis, d = _p_group_frame(P)
    functionals, maximals = _maximal_data(P)
    pos = {vec: i for i, vec in enumerate(functionals)}
    canonical = tuple(
        sorted(pos[(0,) * i + (1,) + (0,) * (d - 1 - i)] for i in range(d))
    )
    yielded = 0
    if limit <= 0:
        return
    yield MdFamily(P, d, [maximals[i] for i in canonical], phi)
    yielded += 1
    for combo in combinations(range(len(functionals)), d):
        if yielded >= limit:
            return
        if combo == canonical:
            continue
        if _rank_mod_p([functionals[i] for i in combo], p) == d:
            yield MdFamily(P, d, [maximals[i] for i in combo], phi)
            yielded += 1


# -- characteristic subgroups by prime ----------------------------------------


def o_p(G: Group, p: int) -> Group:
    """Largest normal p-subgroup: the intersection of all Sylow p-subgroups."""
    system = all_sylow_subgroups(G, p)
    if system.representative.is_trivial:
        return system.representative
    mask = None
    for S in system.all:
        m = G.mask_of(S)
        mask = m if mask is None else mask & m
    return G.subgroup_from_mask(mask)


def o_p_prime(G: Group, p: int) -> Group:
    """Largest normal subgroup of order coprime to p.

    Every normal p'-subgroup is a union of classes whose closures are
    normal p'-atoms, and a join of normal p'-subgroups is again one, so the
    answer is the join of all p'-order class closures.
    """
    atoms = [m for m in _normal_atom_masks(G) if m.bit_count() % p != 0]
    if not atoms:
        return Group(G.degree, (), G.enum_cap, G.table_cap)
    seed = 1
    for m in atoms:
        seed |= m
    tbl = G.table(force=True)
    closed = _closure_indices(tbl, indices_from_mask(seed, G.order()))
    joined = mask_from_indices(closed, G.order())
    if joined.bit_count() % p == 0:
        raise AssertionError("join of normal p'-subgroups is not a p'-group")
    return G.subgroup_from_mask(joined)


def p_residual(G: Group, p: int) -> Group:
    """O^p(G): the subgroup generated by all elements of order coprime to p
    (smallest normal subgroup with p-group quotient)."""
    tbl = G.table(force=False)
    elems = G.elements()
    pprime = [i for i, x in enumerate(elems) if x.order() % p != 0]
    if tbl is not None:
        closed = _closure_indices(tbl, np.array(pprime, dtype=np.int64))
        return G.subgroup_from_indices(closed)
    return subgroup_generated(G, [elems[i] for i in pprime])


# -- Hall subgroups and complements --------------------------------------------


def is_hall(G: Group, H: Group) -> bool:
    """gcd(|H|, [G:H]) = 1."""
    _require_subgroup(G, H)
    return math.gcd(H.order(), G.order() // H.order()) == 1


def is_complemented(
    G: Group, N: Group, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> tuple[bool, Group | None]:
    """Whether some K <= G has NK = G and N ∩ K = 1; returns a witness.

    With |K| = [G:N] and N ∩ K trivial, the product set NK has |N||K| = |G|
    distinct elements, so NK = G holds automatically.
    """
    _require_subgroup(G, N)
    target = G.order() // N.order()
    nmask = G.mask_of(N)
    for m in lattice_masks(G, lattice_cap):
        if m.bit_count() == target and m & nmask == 1:
            return True, G.subgroup_from_mask(m)
    return False, None
