"""Generator-defined permutation groups and the operations on them.

A :class:`Group` is immutable after construction.  Its membership structure
(a base and strong generating set), element list, element index and dense
multiplication table are all built lazily, each exactly once, behind a
per-instance lock.  The element list is only materialized for groups whose
order is at most the enumeration cap; the multiplication table additionally
requires the order to be at most the table cap.

Element sets of subgroups are manipulated as bitmasks over the parent
group's canonical element index (elements sorted lexicographically by image
array, so index 0 is always the identity).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DEFAULT_ENUM_CAP,
    DEFAULT_TABLE_CAP,
    DegreeMismatchError,
    EnumerationCapError,
    NotASubgroupError,
    NotNormalError,
)
from .perms import Permutation


class _Level:
    """One level of the stabilizer chain."""

    __slots__ = ("base", "transversal", "inv_transversal", "orbit", "done")

    def __init__(self, base: int, identity: Permutation):
        self.base = base
        self.transversal = {base: identity}
        self.inv_transversal = {base: identity}
        self.orbit = [base]
        self.done: set[tuple[int, Permutation]] = set()


def _build_bsgs(degree: int, generators: Sequence[Permutation]) -> list[_Level]:
    """Deterministic incremental Schreier-Sims.

    Returns the stabilizer chain; the group order is the product of the
    orbit sizes.  New strong generators are registered at the deepest level
    whose base points they all fix, and every level processes the strong
    generators of its level and below (those generate the level stabilizer).
    """
    ident = Permutation.identity(degree)
    levels: list[_Level] = []
    depth_gens: list[list[Permutation]] = []
    registered: set[Permutation] = set()

    def strip(g: Permutation) -> tuple[Permutation, int]:
        for i, lv in enumerate(levels):
            beta = g.images[lv.base]
            if beta == lv.base:
                continue
            uinv = lv.inv_transversal.get(beta)
            if uinv is None:
                return g, i
            g = g * uinv
        return g, len(levels)

    def register(g: Permutation) -> bool:
        h, m = strip(g)
        if h.is_identity or h in registered:
            return False
        registered.add(h)
        if m == len(levels):
            base = min(i for i, v in enumerate(h.images) if v != i)
            levels.append(_Level(base, ident))
            depth_gens.append([])
        depth_gens[m].append(h)
        return True

    def sweep(l: int) -> list[Permutation]:
        lv = levels[l]
        eff = [g for d in range(l, len(levels)) for g in depth_gens[d]]
        residues: list[Permutation] = []
        queue = [(pt, g) for pt in lv.orbit for g in eff if (pt, g) not in lv.done]
        qi = 0
        while qi < len(queue):
            pt, g = queue[qi]
            qi += 1
            if (pt, g) in lv.done:
                continue
            lv.done.add((pt, g))
            gamma = g.images[pt]
            u = lv.transversal[pt]
            if gamma not in lv.transversal:
                rep = u * g
                lv.transversal[gamma] = rep
                lv.inv_transversal[gamma] = rep.inverse()
                lv.orbit.append(gamma)
                for g2 in eff:
                    queue.append((gamma, g2))
            else:
                sg = u * g * lv.inv_transversal[gamma]
                if not sg.is_identity:
                    residues.append(sg)
        return residues

    pending = [g for g in generators if not g.is_identity]
    while True:
        changed = False
        for g in pending:
            if register(g):
                changed = True
        pending = []
        for l in range(len(levels)):
            res = sweep(l)
            if res:
                pending.extend(res)
                changed = True
        if not pending and not changed:
            break
    return levels


class Group:
    """A finite permutation group on the points {0..degree-1}.

    Construct via :func:`group_from_generators` or the factories in
    :mod:`grouplab.corpus`.  Two groups compare equal when they have the
    same degree and the same element set (which requires enumerability).
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        enum_cap: int = DEFAULT_ENUM_CAP,
        table_cap: int = DEFAULT_TABLE_CAP,
        _known_elements: tuple[Permutation, ...] | None = None,
    ):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise TypeError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if not g.is_identity and g not in seen:
                seen.add(g)
                gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.enum_cap = enum_cap
        self.table_cap = table_cap
        self._lock = threading.Lock()
        self._levels: list[_Level] | None = None
        self._order: int | None = None
        self._elements: tuple[Permutation, ...] | None = _known_elements
        if _known_elements is not None:
            self._order = len(_known_elements)
        self._index: dict[tuple[int, ...], int] | None = None
        self._emat: np.ndarray | None = None
        self._table: np.ndarray | None = None
        self._inv_idx: np.ndarray | None = None
        self.cache: dict = {}

    # -- lazy structure ----------------------------------------------------

    def _bsgs(self) -> list[_Level]:
        if self._levels is None:
            with self._lock:
                if self._levels is None:
                    self._levels = _build_bsgs(self.degree, self.generators)
        return self._levels

    def order(self) -> int:
        if self._order is None:
            n = 1
            for lv in self._bsgs():
                n *= len(lv.transversal)
            with self._lock:
                if self._order is None:
                    self._order = n
        return self._order

    def __len__(self) -> int:
        return self.order()

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        if self._index is not None:
            return g.images in self._index
        h = g
        for lv in self._bsgs():
            beta = h.images[lv.base]
            if beta == lv.base:
                continue
            uinv = lv.inv_transversal.get(beta)
            if uinv is None:
                return False
            h = h * uinv
        return h.is_identity

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted lexicographically by image array.

        Raises EnumerationCapError when the order exceeds the cap.
        """
        if self._elements is None:
            n = self.order()
            if n > self.enum_cap:
                raise EnumerationCapError(
                    f"group of order {n} too large to enumerate "
                    f"(enumeration cap {self.enum_cap})",
                    cap=self.enum_cap,
                    size=n,
                )
            seen = {self.identity.images: self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = x * g
                        if y.images not in seen:
                            seen[y.images] = y
                            nxt.append(y)
                frontier = nxt
            elems = tuple(sorted(seen.values()))
            with self._lock:
                if self._elements is None:
                    self._elements = elems
                    if self._order is None:
                        self._order = len(elems)
        return self._elements

    def _ensure_index(self) -> None:
        if self._index is None:
            elems = self.elements()
            index = {p.images: i for i, p in enumerate(elems)}
            emat = np.array([p.images for p in elems], dtype=np.int32)
            with self._lock:
                if self._index is None:
                    self._emat = emat
                    self._index = index

    def element_index(self, g: Permutation) -> int:
        self._ensure_index()
        try:
            return self._index[g.images]
        except KeyError:
            raise NotASubgroupError(f"{g} is not an element of this group") from None

    def element_at(self, i: int) -> Permutation:
        return self.elements()[i]

    def table(self, force: bool = False) -> np.ndarray | None:
        """Dense multiplication table on element indices, or None when the
        order exceeds the table cap (``force=True`` builds it regardless)."""
        if self._table is None and self.order() > self.table_cap and not force:
            return None
        if self._table is None:
            self._ensure_index()
            emat = self._emat
            n = len(emat)
            lookup = {emat[j].tobytes(): j for j in range(n)}
            tbl = np.empty((n, n), dtype=np.int32)
            for i in range(n):
                prods = emat[:, emat[i]]
                row = tbl[i]
                for j in range(n):
                    row[j] = lookup[prods[j].tobytes()]
            inv_rows = np.argsort(emat, axis=1).astype(np.int32)
            inv = np.fromiter(
                (lookup[inv_rows[i].tobytes()] for i in range(n)),
                dtype=np.int64,
                count=n,
            )
            with self._lock:
                if self._table is None:
                    self._inv_idx = inv
                    self._table = tbl
        return self._table

    def inverse_indices(self) -> np.ndarray:
        self.table()
        return self._inv_idx

    # -- subgroup interop ---------------------------------------------------

    def indices_of(self, sub: "Group") -> np.ndarray:
        """Sorted indices of a subgroup's elements in this group's index."""
        self._ensure_index()
        idx = np.empty(sub.order(), dtype=np.int64)
        for k, p in enumerate(sub.elements()):
            j = self._index.get(p.images)
            if j is None:
                raise NotASubgroupError("element set is not contained in parent")
            idx[k] = j
        idx.sort()
        return idx

    def mask_of(self, sub: "Group") -> int:
        return mask_from_indices(self.indices_of(sub), self.order())

    def subgroup_from_indices(self, idx: np.ndarray) -> "Group":
        """Subgroup with the given element indices (assumed closed).

        A small generating set is extracted greedily in index order, and the
        element list is attached so it is never recomputed.
        """
        elems = self.elements()
        idx = np.sort(np.asarray(idx, dtype=np.int64))
        members = tuple(elems[int(i)] for i in idx)
        gens: list[Permutation] = []
        tbl = self.table()
        if tbl is not None and len(idx) > 1:
            have = np.zeros(self.order(), dtype=bool)
            have[0] = True
            for i in idx:
                i = int(i)
                if have[i]:
                    continue
                gens.append(elems[i])
                prev = np.nonzero(have)[0]
                seed = np.append(prev, i)
                have[_closure_indices(tbl, seed, closed=prev)] = True
                if int(have.sum()) == len(idx):
                    break
        else:
            current = Group(self.degree, (), self.enum_cap, self.table_cap)
            for i in idx:
                p = elems[int(i)]
                if not current.contains(p):
                    gens.append(p)
                    current = Group(
                        self.degree, gens, self.enum_cap, self.table_cap
                    )
                    if current.order() == len(idx):
                        break
        return Group(
            self.degree,
            gens,
            self.enum_cap,
            self.table_cap,
            _known_elements=members,
        )

    def subgroup_from_mask(self, mask: int) -> "Group":
        return self.subgroup_from_indices(indices_from_mask(mask, self.order()))

    def conjugation_vector(self, g_idx: int) -> np.ndarray:
        """Array c with c[x] = index of g^-1 * x * g (requires the table)."""
        tbl = self.table()
        inv = self.inverse_indices()
        return tbl[tbl[int(inv[g_idx])], g_idx]

    # -- comparison ----------------------------------------------------------

    def same_elements(self, other: "Group") -> bool:
        if self.degree != other.degree or self.order() != other.order():
            return False
        return self.elements() == other.elements()

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return self.same_elements(other)

    def __hash__(self) -> int:
        return hash((self.degree, self.order()))

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"<Group degree={self.degree} order={self.order()} gens=[{gens}]>"


# -- bitmask helpers ---------------------------------------------------------


def mask_from_indices(idx: np.ndarray, size: int) -> int:
    bits = np.zeros(size, dtype=np.uint8)
    bits[np.asarray(idx, dtype=np.int64)] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def indices_from_mask(mask: int, size: int) -> np.ndarray:
    raw = mask.to_bytes((size + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.nonzero(bits[:size])[0].astype(np.int64)


def _closure_indices(
    table: np.ndarray, seed: np.ndarray, closed: np.ndarray | None = None
) -> np.ndarray:
    """Multiplicative closure of a set of element indices.

    In a finite group the multiplicative closure of any nonempty set is the
    subgroup it generates.  ``closed`` may name a subset of ``seed`` already
    known to be a subgroup; only the remainder is treated as frontier,
    which makes subgroup joins cheap.
    """
    n = table.shape[0]
    member = np.zeros(n, dtype=bool)
    member[seed] = True
    member[0] = True  # identity
    if closed is not None and closed.size:
        inside = np.zeros(n, dtype=bool)
        inside[closed] = True
        inside[0] = True
        frontier = np.nonzero(member & ~inside)[0]
    else:
        frontier = np.nonzero(member)[0]
    while frontier.size:
        cur = np.nonzero(member)[0]
        prods = np.unique(
            np.concatenate(
                [
                    table[frontier[:, None], cur].ravel(),
                    table[cur[:, None], frontier].ravel(),
                ]
            )
        )
        fresh = prods[~member[prods]]
        member[fresh] = True
        frontier = fresh
    return np.nonzero(member)[0]


@dataclass(frozen=True)
class ElementSet:
    """A set of elements of ``parent``, stored as a bitmask over the
    parent's canonical element index."""

    parent: Group
    mask: int

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> np.ndarray:
        return indices_from_mask(self.mask, self.parent.order())

    def members(self) -> tuple[Permutation, ...]:
        elems = self.parent.elements()
        return tuple(elems[int(i)] for i in self.indices())

    def is_subgroup_set(self) -> bool:
        """Exhaustive check that the set is closed under product and inverse."""
        tbl = self.parent.table()
        idx = self.indices()
        if tbl is not None:
            inside = np.zeros(self.parent.order(), dtype=bool)
            inside[idx] = True
            if not inside[0]:
                return False
            if not inside[self.parent.inverse_indices()[idx]].all():
                return False
            return bool(inside[tbl[np.ix_(idx, idx)]].all())
        members = set(self.members())
        if Permutation.identity(self.parent.degree) not in members:
            return False
        return all(a * b in members for a in members for b in members) and all(
            a.inverse() in members for a in members
        )


# -- constructors and predicates ----------------------------------------------


def group_from_generators(
    degree: int,
    gens: Iterable[Permutation],
    enum_cap: int = DEFAULT_ENUM_CAP,
    table_cap: int = DEFAULT_TABLE_CAP,
) -> Group:
    """Group generated by ``gens`` on {0..degree-1}.  An empty list yields
    the trivial group."""
    return Group(degree, gens, enum_cap, table_cap)


def subgroup_generated(parent: Group, elems: Iterable[Permutation]) -> Group:
    """Subgroup of ``parent`` generated by ``elems``; every element must lie
    in ``parent``."""
    elems = tuple(elems)
    for p in elems:
        if not parent.contains(p):
            raise NotASubgroupError(f"{p} is not an element of the parent group")
    return Group(parent.degree, elems, parent.enum_cap, parent.table_cap)


def _require_subgroup(G: Group, H: Group) -> None:
    if H.degree != G.degree:
        raise NotASubgroupError("degree mismatch")
    for h in H.generators:
        if not G.contains(h):
            raise NotASubgroupError("not a subgroup: generator outside parent")


def conjugate_subgroup(G: Group, H: Group, g: Permutation) -> Group:
    """The subgroup g^-1 H g."""
    _require_subgroup(G, H)
    if not G.contains(g):
        raise NotASubgroupError(f"{g} is not an element of the group")
    ginv = g.inverse()
    return Group(
        G.degree,
        tuple(ginv * h * g for h in H.generators),
        G.enum_cap,
        G.table_cap,
    )


def is_normal(G: Group, H: Group) -> bool:
    """True iff conjugation by every generator of G preserves H."""
    _require_subgroup(G, H)
    for g in G.generators:
        ginv = g.inverse()
        for h in H.generators:
            if not H.contains(ginv * h * g):
                return False
    return True


def normal_closure(G: Group, H: Group) -> Group:
    """Smallest normal subgroup of G containing H."""
    _require_subgroup(G, H)
    tbl = G.table()
    if tbl is not None:
        n = G.order()
        seed = G.indices_of(H) if H.generators else np.array([0], dtype=np.int64)
        member = np.zeros(n, dtype=bool)
        member[_closure_indices(tbl, seed)] = True
        cvecs = [G.conjugation_vector(G.element_index(g)) for g in G.generators]
        while True:
            cur = np.nonzero(member)[0]
            fresh = [cv[cur][~member[cv[cur]]] for cv in cvecs]
            fresh = [f for f in fresh if f.size]
            if not fresh:
                return G.subgroup_from_indices(cur)
            member[np.concatenate(fresh)] = True
            member[_closure_indices(tbl, np.nonzero(member)[0])] = True
    # generic path: conjugate generators and re-close until stable
    gens = list(H.generators)
    K = Group(G.degree, gens, G.enum_cap, G.table_cap)
    queue = list(gens)
    while queue:
        h = queue.pop(0)
        for g in G.generators:
            c = g.inverse() * h * g
            if not K.contains(c):
                gens.append(c)
                K = Group(G.degree, gens, G.enum_cap, G.table_cap)
                queue.append(c)
    return K


def centralizer(G: Group, H: Group) -> Group:
    """Elements of G commuting with every element of H (generator test)."""
    _require_subgroup(G, H)
    if not H.generators:
        return G
    tbl = G.table()
    if tbl is not None:
        keep = np.ones(G.order(), dtype=bool)
        for h in H.generators:
            hi = G.element_index(h)
            keep &= tbl[:, hi] == tbl[hi, :]
        return G.subgroup_from_indices(np.nonzero(keep)[0])
    out = [
        x
        for x in G.elements()
        if all(x * h == h * x for h in H.generators)
    ]
    return Group(G.degree, out, G.enum_cap, G.table_cap, _known_elements=tuple(out))


def normalizer(G: Group, H: Group) -> Group:
    """Elements g of G with H^g = H, by exhaustive scan."""
    _require_subgroup(G, H)
    tbl = G.table()
    if tbl is not None:
        hidx = G.indices_of(H)
        inv = G.inverse_indices()
        keep = []
        for x in range(G.order()):
            conj = tbl[tbl[int(inv[x])][hidx], x]
            conj.sort()
            if np.array_equal(conj, hidx):
                keep.append(x)
        return G.subgroup_from_indices(np.array(keep, dtype=np.int64))
    hset = frozenset(H.elements())
    out = []
    for x in G.elements():
        xinv = x.inverse()
        if all(xinv * h * x in hset for h in H.elements()):
            out.append(x)
    return Group(G.degree, out, G.enum_cap, G.table_cap, _known_elements=tuple(sorted(out)))


def center(G: Group) -> Group:
    return centralizer(G, G)


def intersection(G: Group, H: Group, K: Group) -> Group:
    """H ∩ K as a subgroup of G."""
    tbl = G.table()
    if tbl is not None:
        m = G.mask_of(H) & G.mask_of(K)
        return G.subgroup_from_mask(m)
    hset = set(H.elements())
    members = tuple(sorted(p for p in K.elements() if p in hset))
    gens: list[Permutation] = []
    cur = Group(G.degree, (), G.enum_cap, G.table_cap)
    for p in members:
        if not cur.contains(p):
            gens.append(p)
            cur = Group(G.degree, gens, G.enum_cap, G.table_cap)
    return Group(G.degree, gens, G.enum_cap, G.table_cap, _known_elements=members)


def is_subnormal(G: Group, H: Group) -> bool:
    """True iff the ascending normalizer chain from H reaches G."""
    _require_subgroup(G, H)
    current = H
    while True:
        if current.order() == G.order():
            return True
        nxt = normalizer(G, current)
        if nxt.order() == current.order():
            return False
        current = nxt


@dataclass
class CosetMap:
    """Quotient G/N realized as a permutation group on the cosets of N.

    ``quotient`` acts faithfully and regularly on the [G:N] cosets;
    ``project`` maps each source element to the coset permutation it
    induces by right multiplication.
    """

    source: Group
    kernel: Group
    quotient: Group
    coset_of: np.ndarray
    reps: np.ndarray
    _proj_cache: dict = field(default_factory=dict, repr=False)
    _proj_idx: np.ndarray | None = field(default=None, repr=False)

    def project(self, g: Permutation) -> Permutation:
        return self.project_index(self.source.element_index(g))

    def project_index(self, i: int) -> Permutation:
        p = self._proj_cache.get(i)
        if p is None:
            tbl = self.source.table()
            if tbl is not None:
                imgs = self.coset_of[tbl[self.reps, i]]
            else:
                elems = self.source.elements()
                g = elems[i]
                imgs = [
                    self.coset_of[self.source.element_index(elems[int(r)] * g)]
                    for r in self.reps
                ]
            p = Permutation(tuple(int(v) for v in imgs))
            self._proj_cache[i] = p
        return p

    def projection_indices(self) -> np.ndarray:
        """Array q with q[i] = quotient element index of source element i."""
        if self._proj_idx is None:
            out = np.empty(self.source.order(), dtype=np.int64)
            for i in range(self.source.order()):
                out[i] = self.quotient.element_index(self.project_index(i))
            self._proj_idx = out
        return self._proj_idx

    def image_mask(self, mask: int) -> int:
        proj = self.projection_indices()
        idx = np.unique(proj[indices_from_mask(mask, self.source.order())])
        return mask_from_indices(idx, self.quotient.order())

    def preimage_mask(self, qmask: int) -> int:
        proj = self.projection_indices()
        qbits = np.zeros(self.quotient.order(), dtype=bool)
        qbits[indices_from_mask(qmask, self.quotient.order())] = True
        return mask_from_indices(np.nonzero(qbits[proj])[0], self.source.order())

    def preimage_group(self, sub: Group) -> Group:
        return self.source.subgroup_from_mask(
            self.preimage_mask(self.quotient.mask_of(sub))
        )

    def image_group(self, sub: Group) -> Group:
        return self.quotient.subgroup_from_mask(
            self.image_mask(self.source.mask_of(sub))
        )


def quotient(G: Group, N: Group) -> CosetMap:
    """G/N via the right-multiplication action on cosets of N.

    Raises NotNormalError when N is not normal in G (the action kernel
    would exceed N).
    """
    if not is_normal(G, N):
        raise NotNormalError("kernel of a quotient must be a normal subgroup")
    n = G.order()
    tbl = G.table()
    coset_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    if tbl is not None:
        nidx = G.indices_of(N)
        for i in range(n):
            if coset_of[i] < 0:
                coset_of[tbl[nidx, i]] = len(reps)
                reps.append(i)
    else:
        elems = G.elements()
        nelems = N.elements()
        for i in range(n):
            if coset_of[i] < 0:
                for x in nelems:
                    coset_of[G.element_index(x * elems[i])] = len(reps)
                reps.append(i)
    reps_arr = np.array(reps, dtype=np.int64)
    k = len(reps)
    qgens = []
    for g in G.generators:
        gi = G.element_index(g)
        if tbl is not None:
            imgs = coset_of[tbl[reps_arr, gi]]
        else:
            elems = G.elements()
            imgs = [coset_of[G.element_index(elems[int(r)] * g)] for r in reps_arr]
        qgens.append(Permutation(tuple(int(v) for v in imgs)))
    Q = Group(max(k, 1), qgens, G.enum_cap, G.table_cap)
    return CosetMap(source=G, kernel=N, quotient=Q, coset_of=coset_of, reps=reps_arr)
