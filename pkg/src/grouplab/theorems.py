"""Hypothesis and conclusion evaluation for the verified statements.

The headline hypothesis ("every member of a generator-number family of
maximal subgroups of a Sylow p-subgroup permutes with all coprime Sylow
subgroups") quantifies over families of d maximal subgroups intersecting in
the Frattini subgroup.  Families correspond to linearly independent
d-subsets of hyperplane functionals, so the exists/forall quantifiers are
decided exactly by linear algebra over F_p on the set of maximal subgroups
that pass the permutability test, with no family enumeration:

  * some family qualifies  iff  the passing functionals have rank d;
  * every family qualifies iff  every maximal subgroup passes.

Both shortcuts are differential-tested against direct family enumeration.

Lemma suites enumerate their quantified instances from the subgroup
lattice.  Each part stops at a fixed deterministic instance budget and
flags the record as sampled when it does; counts are always reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .errors import DEFAULT_LATTICE_CAP, LatticeCapError
from .groups import Group, is_normal, is_subnormal, normal_closure, normalizer, quotient
from .permutability import is_s_permutable, is_s_semipermutable, product_set
from .solubility import (
    is_p_nilpotent,
    is_p_soluble,
    is_p_supersoluble,
    is_soluble,
    is_supersoluble,
)
from .structure import (
    _maximal_data,
    _rank_mod_p,
    all_subgroups,
    all_sylow_subgroups,
    lattice_masks,
    normal_subgroup_masks,
    o_p,
    p_part,
    p_residual,
    primes_of,
    smallest_generator_number,
    sylow_subgroup,
)

PART_BUDGET = 400
"""Most instances evaluated per lemma part per group (deterministic prefix)."""

RESTRICTION_SAMPLES = 3
"""Overgroups K sampled per subgroup for the restriction parts."""


class HypothesisMode(str, Enum):
    EXISTS = "exists"
    FORALL = "forall"
    CANONICAL = "canonical"


@dataclass
class VerificationRecord:
    """Outcome of one check on one (group, prime) instance."""

    check: str
    group: str
    prime: int | None
    hypothesis: bool | None
    conclusion: bool | None
    violated: bool
    skipped: str | None = None
    witnesses: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.skipped is None and self.violated:
            if not (self.hypothesis and not self.conclusion):
                raise AssertionError(
                    "violated records require hypothesis and failed conclusion"
                )

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return f"skipped:{self.skipped}"
        return "VIOLATED" if self.violated else "ok"


def _fmt_group(H: Group) -> str:
    gens = ",".join(g.cycle_string() for g in H.generators) or "()"
    return f"order {H.order()} = <{gens}>"


def _ssp_failure(G: Group, H: Group) -> dict:
    """First Sylow subgroup of coprime order that H fails to permute with."""
    for q in primes_of(G):
        if H.order() % q == 0:
            continue
        for Q in all_sylow_subgroups(G, q).all:
            r = product_set(G, H, Q)
            if not r.equal:
                return {
                    "prime": q,
                    "sylow": _fmt_group(Q),
                    "product_size": r.cardinality,
                    "hk_equals_kh": False,
                }
    return {}


# -- the main statement ---------------------------------------------------------


def main_hypothesis(
    G: Group, p: int, mode: HypothesisMode = HypothesisMode.EXISTS
) -> tuple[bool, dict]:
    """Whether every member of a / the canonical / all d-families of maximal
    subgroups of the Sylow p-subgroup is s-semipermutable, with witnesses."""
    if G.order() % p != 0:
        raise ValueError(f"prime {p} does not divide the group order")
    mode = HypothesisMode(mode)
    P = sylow_subgroup(G, p)
    d = smallest_generator_number(P)
    functionals, maximals = _maximal_data(P)
    wit: dict = {"d": d, "maximal_count": len(maximals), "mode": mode.value}
    if d == 0:
        return True, wit
    if mode is HypothesisMode.CANONICAL:
        canonical = [
            functionals.index((0,) * i + (1,) + (0,) * (d - 1 - i)) for i in range(d)
        ]
        for i in canonical:
            if not is_s_semipermutable(G, maximals[i]):
                wit["failing_member"] = _fmt_group(maximals[i])
                wit["failure"] = _ssp_failure(G, maximals[i])
                return False, wit
        wit["family"] = [_fmt_group(maximals[i]) for i in sorted(canonical)]
        return True, wit
    passing = [
        i for i, M in enumerate(maximals) if is_s_semipermutable(G, M)
    ]
    wit["passing_count"] = len(passing)
    if mode is HypothesisMode.FORALL:
        # every maximal subgroup lies in some family, so "all families" is
        # equivalent to every maximal subgroup passing
        if len(passing) == len(maximals):
            return True, wit
        failing = next(i for i in range(len(maximals)) if i not in set(passing))
        wit["failing_member"] = _fmt_group(maximals[failing])
        wit["failure"] = _ssp_failure(G, maximals[failing])
        return False, wit
    # exists: some d linearly independent passing functionals
    basis: list[int] = []
    for i in passing:
        if _rank_mod_p([functionals[j] for j in basis + [i]], p) == len(basis) + 1:
            basis.append(i)
            if len(basis) == d:
                break
    if len(basis) == d:
        wit["family"] = [_fmt_group(maximals[i]) for i in basis]
        return True, wit
    wit["passing_rank"] = len(basis)
    failing = [i for i in range(len(maximals)) if i not in set(passing)]
    if failing:
        wit["failing_member"] = _fmt_group(maximals[failing[0]])
        wit["failure"] = _ssp_failure(G, maximals[failing[0]])
    return False, wit


def main_conclusion(G: Group, p: int) -> tuple[bool, dict]:
    """|P| = p, or the group is p-supersoluble."""
    P = sylow_subgroup(G, p)
    if P.order() == p:
        return True, {"branch": "sylow of prime order"}
    ok = is_p_supersoluble(G, p)
    wit = {"branch": "p-supersoluble", "p_supersoluble": ok}
    if not ok:
        from .solubility import chief_series

        wit["chief_factors"] = chief_series(G).factor_orders
    return ok, wit


def verify_main(
    G: Group,
    p: int,
    mode: HypothesisMode = HypothesisMode.EXISTS,
    group_name: str = "?",
) -> VerificationRecord:
    t0 = time.perf_counter()
    hyp, hw = main_hypothesis(G, p, mode)
    concl, cw = main_conclusion(G, p)
    wit = {"hypothesis": hw, "conclusion": cw}
    return VerificationRecord(
        check="main",
        group=group_name,
        prime=p,
        hypothesis=hyp,
        conclusion=concl,
        violated=hyp and not concl,
        witnesses=wit,
        elapsed=time.perf_counter() - t0,
    )


# -- lemma suites ----------------------------------------------------------------


def _part_record(
    check: str,
    group_name: str,
    prime: int | None,
    instances: list[tuple[bool, bool, dict]],
    sampled: bool,
    t0: float,
    extra: dict | None = None,
) -> VerificationRecord:
    """Aggregate per-instance (premise, consequence, detail) triples."""
    held = [x for x in instances if x[0]]
    bad = [x for x in held if not x[1]]
    wit = {
        "instances": len(instances),
        "premise_held": len(held),
        "sampled": sampled,
    }
    if extra:
        wit.update(extra)
    if bad:
        wit["counterexample"] = bad[0][2]
    return VerificationRecord(
        check=check,
        group=group_name,
        prime=prime,
        hypothesis=bool(held),
        conclusion=not bad,
        violated=bool(held) and bool(bad),
        witnesses=wit,
        elapsed=time.perf_counter() - t0,
    )


def _lattice_with_masks(G: Group, lattice_cap: int) -> list[tuple[int, Group]]:
    masks = lattice_masks(G, lattice_cap)
    groups = all_subgroups(G, lattice_cap)
    return list(zip(masks, groups))


def _standalone(G: Group, mask: int) -> Group:
    key = ("standalone", mask)
    sub = G.cache.get(key)
    if sub is None:
        sub = G.subgroup_from_mask(mask)
        G.cache[key] = sub
    return sub


def verify_lemma_2_1(
    G: Group, group_name: str = "?", lattice_cap: int = DEFAULT_LATTICE_CAP
) -> list[VerificationRecord]:
    """The six closure properties of permuting-with-all-Sylows subgroups."""
    t0 = time.perf_counter()
    lat = _lattice_with_masks(G, lattice_cap)
    sp = [(m, H) for m, H in lat if is_s_permutable(G, H)]
    records = []

    # (1) s-permutable implies subnormal
    inst, sampled = [], False
    for m, H in sp:
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        inst.append(
            (True, is_subnormal(G, H), {"subgroup": _fmt_group(H)})
        )
    records.append(
        _part_record("lemma-2.1.1", group_name, None, inst, sampled, t0)
    )

    # (2) restriction to intermediate subgroups, sampled
    t0 = time.perf_counter()
    inst, sampled = [], False
    for m, H in sp:
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        picked = 0
        for km, K in lat:
            if km != m and km | m == km:
                sub = _standalone(G, km)
                inst.append(
                    (
                        True,
                        is_s_permutable(sub, H),
                        {"subgroup": _fmt_group(H), "intermediate": _fmt_group(K)},
                    )
                )
                picked += 1
                if picked >= RESTRICTION_SAMPLES:
                    sampled = True
                    break
    records.append(
        _part_record("lemma-2.1.2", group_name, None, inst, sampled, t0)
    )

    # (3) s-permutable Hall subgroups are normal
    t0 = time.perf_counter()
    inst = []
    for m, H in sp:
        if gcd(H.order(), G.order() // H.order()) == 1:
            inst.append(
                (True, is_normal(G, H), {"subgroup": _fmt_group(H)})
            )
    records.append(
        _part_record("lemma-2.1.3", group_name, None, inst, False, t0)
    )

    # (4) for normal K <= H: H s-permutable iff H/K s-permutable in G/K
    t0 = time.perf_counter()
    inst, sampled = [], False
    sp_masks = {m for m, _ in sp}
    for nm in normal_subgroup_masks(G):
        if sampled:
            break
        if nm == 1 or nm == (1 << G.order()) - 1:
            # kernel 1 and kernel G are tautological transfers
            continue
        cm = G.cache.get(("quotient", nm))
        if cm is None:
            cm = quotient(G, G.subgroup_from_mask(nm))
            G.cache[("quotient", nm)] = cm
        for m, H in lat:
            if m | nm != m:  # requires K <= H
                continue
            if len(inst) >= PART_BUDGET:
                sampled = True
                break
            image = cm.quotient.subgroup_from_mask(cm.image_mask(m))
            lhs = m in sp_masks
            rhs = is_s_permutable(cm.quotient, image)
            inst.append(
                (
                    True,
                    lhs == rhs,
                    {
                        "subgroup": _fmt_group(H),
                        "kernel_order": nm.bit_count(),
                        "in_group": lhs,
                        "in_quotient": rhs,
                    },
                )
            )
    records.append(
        _part_record("lemma-2.1.4", group_name, None, inst, sampled, t0)
    )

    # (5) intersections of s-permutable subgroups are s-permutable
    t0 = time.perf_counter()
    inst, sampled = [], False
    for i in range(len(sp)):
        if sampled:
            break
        for j in range(i + 1, len(sp)):
            if len(inst) >= PART_BUDGET:
                sampled = True
                break
            inter = _standalone(G, sp[i][0] & sp[j][0])
            inst.append(
                (
                    True,
                    is_s_permutable(G, inter),
                    {
                        "first": _fmt_group(sp[i][1]),
                        "second": _fmt_group(sp[j][1]),
                        "intersection": _fmt_group(inter),
                    },
                )
            )
    records.append(
        _part_record("lemma-2.1.5", group_name, None, inst, sampled, t0)
    )

    # (6) p-subgroups: s-permutable iff the normalizer contains the p-residual
    t0 = time.perf_counter()
    inst, sampled = [], False
    residuals = {p: p_residual(G, p) for p in primes_of(G)}
    res_masks = {p: G.mask_of(r) for p, r in residuals.items()}
    for m, H in lat:
        if sampled:
            break
        n = H.order()
        if n == 1:
            continue
        ps = [p for p in primes_of(G) if n == p_part(n, p)]
        if not ps:
            continue
        p = ps[0]
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        nz_mask = G.mask_of(normalizer(G, H))
        lhs = is_s_permutable(G, H)
        rhs = res_masks[p] | nz_mask == nz_mask
        inst.append(
            (
                True,
                lhs == rhs,
                {
                    "subgroup": _fmt_group(H),
                    "prime": p,
                    "s_permutable": lhs,
                    "normalizer_contains_residual": rhs,
                },
            )
        )
    records.append(
        _part_record("lemma-2.1.6", group_name, None, inst, sampled, t0)
    )
    return records


def _ssp_p_subgroups(
    G: Group, lattice_cap: int
) -> list[tuple[int, int, Group]]:
    """(prime, mask, subgroup) for every nontrivial s-semipermutable
    p-subgroup in the lattice."""
    out = []
    for m, H in _lattice_with_masks(G, lattice_cap):
        n = H.order()
        if n == 1:
            continue
        ps = [p for p in primes_of(G) if n == p_part(n, p)]
        if not ps:
            continue
        if is_s_semipermutable(G, H):
            out.append((ps[0], m, H))
    return out


def verify_lemma_2_2(
    G: Group, group_name: str = "?", lattice_cap: int = DEFAULT_LATTICE_CAP
) -> list[VerificationRecord]:
    """Closure properties of s-semipermutable p-subgroups."""
    t0 = time.perf_counter()
    lat = _lattice_with_masks(G, lattice_cap)
    ssp = _ssp_p_subgroups(G, lattice_cap)
    separation = sum(1 for _, __, H in ssp if not is_s_permutable(G, H))
    records = []

    # (1) restriction to intermediate subgroups, sampled
    inst, sampled = [], False
    for p, m, H in ssp:
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        picked = 0
        for km, K in lat:
            if km != m and km | m == km:
                sub = _standalone(G, km)
                inst.append(
                    (
                        True,
                        is_s_semipermutable(sub, H),
                        {"subgroup": _fmt_group(H), "intermediate": _fmt_group(K)},
                    )
                )
                picked += 1
                if picked >= RESTRICTION_SAMPLES:
                    sampled = True
                    break
    records.append(
        _part_record(
            "lemma-2.2.1",
            group_name,
            None,
            inst,
            sampled,
            t0,
            extra={"separation_count": separation},
        )
    )

    # (2) images modulo normal subgroups stay s-semipermutable
    t0 = time.perf_counter()
    inst, sampled = [], False
    for nm in normal_subgroup_masks(G):
        if sampled:
            break
        if nm == 1 or nm == (1 << G.order()) - 1:
            continue
        cm = G.cache.get(("quotient", nm))
        if cm is None:
            cm = quotient(G, G.subgroup_from_mask(nm))
            G.cache[("quotient", nm)] = cm
        for p, m, H in ssp:
            if len(inst) >= PART_BUDGET:
                sampled = True
                break
            image = cm.quotient.subgroup_from_mask(cm.image_mask(m))
            inst.append(
                (
                    True,
                    is_s_semipermutable(cm.quotient, image),
                    {
                        "subgroup": _fmt_group(H),
                        "kernel_order": nm.bit_count(),
                        "image_order": image.order(),
                    },
                )
            )
    records.append(
        _part_record("lemma-2.2.2", group_name, None, inst, sampled, t0)
    )

    # (3) inside the p-core, s-semipermutable implies s-permutable
    t0 = time.perf_counter()
    inst, sampled = [], False
    cores = {p: G.mask_of(o_p(G, p)) for p in primes_of(G)}
    for p, m, H in ssp:
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        if m | cores[p] != cores[p]:
            continue
        inst.append(
            (
                True,
                is_s_permutable(G, H),
                {"subgroup": _fmt_group(H), "prime": p},
            )
        )
    records.append(
        _part_record("lemma-2.2.3", group_name, None, inst, sampled, t0)
    )

    # (4) intersections with normal subgroups stay s-semipermutable
    t0 = time.perf_counter()
    inst, sampled = [], False
    for nm in normal_subgroup_masks(G):
        if sampled:
            break
        for p, m, H in ssp:
            if len(inst) >= PART_BUDGET:
                sampled = True
                break
            inter = _standalone(G, m & nm)
            inst.append(
                (
                    True,
                    is_s_semipermutable(G, inter),
                    {
                        "subgroup": _fmt_group(H),
                        "normal_order": nm.bit_count(),
                        "intersection": _fmt_group(inter),
                    },
                )
            )
    records.append(
        _part_record("lemma-2.2.4", group_name, None, inst, sampled, t0)
    )
    return records


def verify_lemma_2_3(
    G: Group, group_name: str = "?", lattice_cap: int = DEFAULT_LATTICE_CAP
) -> list[VerificationRecord]:
    """Normal closures of s-semipermutable p-subgroups are soluble.

    Above the lattice cap the p-subgroups are drawn from the lattices of
    the Sylow representatives instead of the full lattice, and the record
    is flagged sampled.
    """
    t0 = time.perf_counter()
    inst, sampled = [], False
    try:
        candidates = [(m, H) for p, m, H in _ssp_p_subgroups(G, lattice_cap)]
    except LatticeCapError:
        sampled = True
        candidates = []
        seen: set[int] = set()
        for p in primes_of(G):
            P = all_sylow_subgroups(G, p).representative
            for S in all_subgroups(P, lattice_cap):
                if S.order() == 1:
                    continue
                m = G.mask_of(S)
                if m in seen:
                    continue
                seen.add(m)
                if is_s_semipermutable(G, S):
                    candidates.append((m, S))
        candidates.sort(key=lambda t: (t[1].order(), t[0]))
    for m, H in candidates:
        if len(inst) >= PART_BUDGET:
            sampled = True
            break
        closure = normal_closure(G, H)
        key = ("closure_soluble", G.mask_of(closure))
        ok = G.cache.get(key)
        if ok is None:
            ok = is_soluble(closure)
            G.cache[key] = ok
        inst.append(
            (
                True,
                ok,
                {"subgroup": _fmt_group(H), "closure_order": closure.order()},
            )
        )
    return [_part_record("lemma-2.3", group_name, None, inst, sampled, t0)]


def _complemented_within(
    G: Group, m_mask: int, n_mask: int, lattice_cap: int
) -> bool:
    target = m_mask.bit_count() // n_mask.bit_count()
    for km in lattice_masks(G, lattice_cap):
        if (
            km.bit_count() == target
            and km | m_mask == m_mask
            and km & n_mask == 1
        ):
            return True
    return False


def verify_lemma_2_4(
    G: Group, group_name: str = "?", lattice_cap: int = DEFAULT_LATTICE_CAP
) -> list[VerificationRecord]:
    """Complements of coprime abelian normal subgroups lift to the group."""
    t0 = time.perf_counter()
    lat = _lattice_with_masks(G, lattice_cap)
    full = (1 << G.order()) - 1
    inst, sampled = [], False
    for nm in normal_subgroup_masks(G):
        if sampled or nm == 1:
            continue
        N = _standalone(G, nm)
        if not all(a * b == b * a for a in N.generators for b in N.generators):
            continue
        for mm, M in lat:
            if len(inst) >= PART_BUDGET:
                sampled = True
                break
            if nm | mm != mm:
                continue
            if gcd(N.order(), G.order() // M.order()) != 1:
                continue
            if not _complemented_within(G, mm, nm, lattice_cap):
                continue
            inst.append(
                (
                    True,
                    _complemented_within(G, full, nm, lattice_cap),
                    {"normal": _fmt_group(N), "intermediate": _fmt_group(M)},
                )
            )
    return [_part_record("lemma-2.4", group_name, None, inst, sampled, t0)]


def verify_srinivasan(
    G: Group, group_name: str = "?"
) -> VerificationRecord:
    """All maximal subgroups of all Sylow subgroups s-permutable implies
    supersoluble."""
    t0 = time.perf_counter()
    hyp = True
    wit: dict = {"checked": 0}
    for p in primes_of(G):
        for P in all_sylow_subgroups(G, p).all:
            for M in _maximal_data(P)[1]:
                wit["checked"] += 1
                if not is_s_permutable(G, M):
                    hyp = False
                    wit["failing_member"] = _fmt_group(M)
                    wit["prime"] = p
                    break
            if not hyp:
                break
        if not hyp:
            break
    concl = is_supersoluble(G)
    wit["supersoluble"] = concl
    return VerificationRecord(
        check="srinivasan",
        group=group_name,
        prime=None,
        hypothesis=hyp,
        conclusion=concl,
        violated=hyp and not concl,
        witnesses=wit,
        elapsed=time.perf_counter() - t0,
    )


def verify_corollary_4_1(
    G: Group,
    mode: HypothesisMode = HypothesisMode.EXISTS,
    group_name: str = "?",
) -> list[VerificationRecord]:
    """At the smallest prime, the family hypothesis is equivalent to
    p-nilpotency; both directions are checked as separate records."""
    t0 = time.perf_counter()
    p = primes_of(G)[0] if G.order() > 1 else None
    if p is None:
        return [
            VerificationRecord(
                check="cor-4.1",
                group=group_name,
                prime=None,
                hypothesis=True,
                conclusion=True,
                violated=False,
                witnesses={"trivial": True},
                elapsed=time.perf_counter() - t0,
            )
        ]
    hyp, hw = main_hypothesis(G, p, mode)
    nilp = is_p_nilpotent(G, p)
    fwd = VerificationRecord(
        check="cor-4.1",
        group=group_name,
        prime=p,
        hypothesis=hyp,
        conclusion=nilp,
        violated=hyp and not nilp,
        witnesses={"hypothesis": hw, "p_nilpotent": nilp},
        elapsed=time.perf_counter() - t0,
    )
    conv = VerificationRecord(
        check="cor-4.1-conv",
        group=group_name,
        prime=p,
        hypothesis=nilp,
        conclusion=hyp,
        violated=nilp and not hyp,
        witnesses={"p_nilpotent": nilp, "hypothesis": hw},
        elapsed=0.0,
    )
    return [fwd, conv]


def verify_corollary_4_2(
    G: Group,
    p: int,
    mode: HypothesisMode = HypothesisMode.EXISTS,
    group_name: str = "?",
) -> VerificationRecord:
    """p-soluble groups satisfying the family hypothesis are p-supersoluble."""
    t0 = time.perf_counter()
    soluble_p = is_p_soluble(G, p)
    hyp_family, hw = main_hypothesis(G, p, mode)
    hyp = soluble_p and hyp_family
    concl = is_p_supersoluble(G, p)
    return VerificationRecord(
        check="cor-4.2",
        group=group_name,
        prime=p,
        hypothesis=hyp,
        conclusion=concl,
        violated=hyp and not concl,
        witnesses={"p_soluble": soluble_p, "family_hypothesis": hw},
        elapsed=time.perf_counter() - t0,
    )


def verify_corollary_4_3(
    G: Group,
    p: int,
    mode: HypothesisMode = HypothesisMode.EXISTS,
    group_name: str = "?",
) -> VerificationRecord:
    """If the Sylow normalizer is p-nilpotent and the family hypothesis
    holds, the group is p-nilpotent."""
    t0 = time.perf_counter()
    P = sylow_subgroup(G, p)
    NP = normalizer(G, P)
    NP_std = G.subgroup_from_mask(G.mask_of(NP))
    normalizer_nilp = is_p_nilpotent(NP_std, p)
    hyp_family, hw = main_hypothesis(G, p, mode)
    hyp = normalizer_nilp and hyp_family
    concl = is_p_nilpotent(G, p)
    return VerificationRecord(
        check="cor-4.3",
        group=group_name,
        prime=p,
        hypothesis=hyp,
        conclusion=concl,
        violated=hyp and not concl,
        witnesses={
            "normalizer_order": NP.order(),
            "normalizer_p_nilpotent": normalizer_nilp,
            "family_hypothesis": hw,
        },
        elapsed=time.perf_counter() - t0,
    )
