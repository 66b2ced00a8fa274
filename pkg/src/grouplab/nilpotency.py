"""Nilpotency tests and structure certificates for minimal non-nilpotent groups.

Nilpotency is decided by two independent methods with different failure
modes: uniqueness of every Sylow subgroup (primary, cheap given the
lattice) and termination of the lower central series (the cross-check).
A disagreement is always an implementation bug and raises.

A minimal non-nilpotent ("Schmidt") group is non-nilpotent with every
maximal subgroup nilpotent; ``schmidt_certificate`` checks the full
structural checklist (a)-(m) for such groups and refuses to swallow any
failure.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from ._kernels import K
from .arith import multiplicative_order, prime_factorization
from .errors import CertificateFailure, NilpotencyTestDisagreement, NotSchmidt
from .groups import FiniteGroup
from .invariants import center, derived_subgroup, profile
from .lattice import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    frattini,
    sylow_subgroups,
    verify_schmidt_lattice,
)
from .sections import as_group, quotient_with_map


def is_nilpotent_sylow(group: FiniteGroup, lattice: SubgroupLattice) -> bool:
    """True iff every prime dividing |G| has exactly one Sylow subgroup."""
    return all(
        len(sylow_subgroups(group, lattice, p)) == 1
        for p in prime_factorization(group.order)
    )


def lower_central_series(group: FiniteGroup) -> list[Subgroup]:
    """G = gamma_1 >= gamma_2 = [G, G] >= ... until stabilization."""
    table, inv = group.kernel_handles()
    n = group.order
    full = bytes([1]) * n
    series = [Subgroup.full(group)]
    current = full
    while True:
        comm = K.commutator_set(table, inv, n, current, full)
        seeds = array("i", [x for x in range(n) if comm[x]])
        mask, _ = K.subgroup_closure(table, n, array("i", [0]), seeds)
        if mask == current:
            break
        series.append(Subgroup.from_mask(group, mask, normal=True))
        current = mask
        if mask.count(1) == 1:
            break
    return series


def is_nilpotent_lcs(group: FiniteGroup) -> tuple[bool, int | None]:
    """Lower-central-series test; returns (nilpotent, class) with class None if not."""
    series = lower_central_series(group)
    if series[-1].order == 1:
        return True, len(series) - 1
    return False, None


def nilpotency_checked(group: FiniteGroup, lattice: SubgroupLattice) -> tuple[bool, int | None]:
    """Run both nilpotency tests; raise if they disagree."""
    by_sylow = is_nilpotent_sylow(group, lattice)
    by_lcs, nil_class = is_nilpotent_lcs(group)
    if by_sylow != by_lcs:
        raise NilpotencyTestDisagreement(
            f"{group.name}: Sylow test says {by_sylow}, lower-central says {by_lcs}"
        )
    return by_sylow, nil_class


def is_schmidt(group: FiniteGroup, lattice: SubgroupLattice) -> bool:
    """Non-nilpotent with every maximal (hence every proper) subgroup nilpotent."""
    nilpotent, _ = nilpotency_checked(group, lattice)
    if nilpotent:
        return False
    from .lattice import maximal_subgroups

    for sub in maximal_subgroups(group, lattice):
        sub_group, _ = as_group(sub)
        if not is_nilpotent_lcs(sub_group)[0]:
            return False
    return True


@dataclass
class SchmidtCertificate:
    """Structural checklist for a minimal non-nilpotent group of order p^m q^n."""

    group: FiniteGroup
    p: int
    q: int
    m: int
    n: int
    r: int
    y: int
    sylow_p: Subgroup
    sylow_q: Subgroup
    center: Subgroup
    frattini: Subgroup
    derived: Subgroup
    frattini_of_p: Subgroup
    quotient_s: FiniteGroup
    p1: Subgroup
    q1: Subgroup
    checklist: tuple[tuple[str, bool, str], ...]

    def to_json_dict(self) -> dict:
        return {
            "checklist": {
                letter: {"detail": detail, "ok": ok}
                for letter, ok, detail in self.checklist
            },
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "quotient": profile(self.quotient_s).to_json_dict(),
            "r": self.r,
            "subgroup_orders": {
                "Gprime": self.derived.order,
                "P": self.sylow_p.order,
                "P1": self.p1.order,
                "Phi": self.frattini.order,
                "PhiP": self.frattini_of_p.order,
                "Q": self.sylow_q.order,
                "Q1": self.q1.order,
                "Z": self.center.order,
            },
            "y": self.y,
        }


def _element_power(group: FiniteGroup, x: int, k: int) -> int:
    cur = 0
    for _ in range(k):
        cur = group.mul(cur, x)
    return cur


def _map_local_mask(elems: array, local_mask: bytes, parent: FiniteGroup) -> Subgroup:
    mask = bytearray(parent.order)
    for i, e in enumerate(elems):
        if local_mask[i]:
            mask[e] = 1
    return Subgroup.from_mask(parent, bytes(mask))


def schmidt_certificate(group: FiniteGroup, lattice: SubgroupLattice) -> SchmidtCertificate:
    """Fill and verify the full certificate; raises on the first failed entry."""
    if not is_schmidt(group, lattice):
        raise NotSchmidt(f"{group.name} is not minimal non-nilpotent")

    checklist: list[tuple[str, bool, str]] = []

    def record(letter: str, ok: bool, detail: str) -> None:
        checklist.append((letter, ok, detail))
        if not ok:
            raise CertificateFailure(letter, f"{group.name}: {detail}")

    # (a) order is p^m q^n for two distinct primes
    factors = prime_factorization(group.order)
    record(
        "a",
        len(factors) == 2,
        f"|G| = {group.order} has prime factorization {factors}",
    )

    primes = sorted(factors)
    sylows = {pr: sylow_subgroups(group, lattice, pr) for pr in primes}
    unique = [pr for pr in primes if len(sylows[pr]) == 1]
    # (b) exactly one prime has a unique (normal) Sylow subgroup
    record(
        "b",
        len(unique) == 1,
        f"primes with a unique Sylow subgroup: {unique}",
    )
    p = unique[0]
    q = next(pr for pr in primes if pr != p)
    m, n = factors[p], factors[q]
    big_p = sylows[p][0]

    # (c) some Sylow q-subgroup is cyclic; pick the first, with least generator
    big_q = sylows[q][0]
    table, _ = group.kernel_handles()
    orders = K.element_orders(table, group.order)
    y = next((x for x in big_q.elements() if orders[x] == big_q.order), None)
    record(
        "c",
        y is not None,
        f"Sylow {q}-subgroup of order {big_q.order} cyclic: generator {y}",
    )

    # (d) y^q lies in the center
    z_sub = center(group)
    y_q = _element_power(group, y, q)
    record("d", y_q in z_sub, f"y^q = element {y_q}, center order {z_sub.order}")

    # (e) Z(G) = Phi(G)
    phi_g = frattini(group, lattice)
    record(
        "e",
        z_sub.bits == phi_g.bits,
        f"|Z(G)| = {z_sub.order}, |Phi(G)| = {phi_g.order}",
    )

    # subgroup data of P, materialized once
    p_group, p_elems = as_group(big_p)
    p_lattice = all_subgroups(p_group)
    phi_p_local = frattini(p_group, p_lattice)
    phi_p = _map_local_mask(p_elems, phi_p_local.mask, group)
    p_derived_local = derived_subgroup(p_group)
    p_derived = _map_local_mask(p_elems, p_derived_local.mask, group)
    z_p_local = center(p_group)

    # (f) Z(G) = Phi(P) x <y^q> as an internal direct product
    gen_sub_mask, _ = K.subgroup_closure(
        table, group.order, array("i", [0]), array("i", [y_q])
    )
    y_q_sub = Subgroup.from_mask(group, gen_sub_mask)
    intersection_trivial = (phi_p.bits & y_q_sub.bits) == 1  # bit 0 is the identity
    commute = all(
        group.mul(a, b) == group.mul(b, a)
        for a in phi_p.elements()
        for b in y_q_sub.elements()
    )
    union_seeds = array("i", sorted(set(phi_p.elements()) | set(y_q_sub.elements())))
    generated, _ = K.subgroup_closure(table, group.order, array("i", [0]), union_seeds)
    generates = generated == z_sub.mask
    record(
        "f",
        intersection_trivial and commute and generates,
        f"Phi(P) order {phi_p.order}, <y^q> order {y_q_sub.order}: "
        f"trivial intersection {intersection_trivial}, commute {commute}, "
        f"generate Z {generates}",
    )

    # (g) G' = P
    g_derived = derived_subgroup(group)
    record(
        "g",
        g_derived.bits == big_p.bits,
        f"|G'| = {g_derived.order}, |P| = {big_p.order}",
    )

    # (h) P' = Phi(P)
    record(
        "h",
        p_derived.bits == phi_p.bits,
        f"|P'| = {p_derived.order}, |Phi(P)| = {phi_p.order}",
    )

    # (i) |P/P'| = p^r with r the multiplicative order of p mod q
    r = multiplicative_order(p, q)
    record(
        "i",
        big_p.order == p_derived.order * p**r,
        f"|P/P'| = {big_p.order // p_derived.order}, p^r = {p**r} (r = {r})",
    )

    p_abelian = p_group.is_abelian()
    if p_abelian:
        # (j) P elementary abelian of order p^r and minimal normal in G
        elementary = big_p.order == p**r and all(
            orders[x] == p for x in big_p.elements() if x != 0
        )
        proper_normal = [
            s
            for s in lattice.subgroups
            if 1 < s.order < big_p.order and big_p.contains_subgroup(s) and s.normal
        ]
        record(
            "j",
            elementary and not proper_normal,
            f"P abelian: elementary of order p^r = {elementary}, "
            f"proper normal-in-G subgroups inside P: {len(proper_normal)}",
        )
        record("k", True, "P abelian: non-abelian branch not applicable")
    else:
        record("j", True, "P non-abelian: abelian branch not applicable")
        # (k) Z(P) = P' = Phi(P) and |P/Z(P)| = p^r
        same = z_p_local.mask == p_derived_local.mask == phi_p_local.mask
        index_ok = big_p.order == z_p_local.order * p**r
        record(
            "k",
            same and index_ok,
            f"P non-abelian: Z(P)=P'=Phi(P) is {same}, |P/Z(P)| = "
            f"{big_p.order // z_p_local.order} vs p^r = {p**r}",
        )

    # (l) S = G/Z(G) has order p^r q, exponent pq, and no element attains it
    quotient_s, coset_id = quotient_with_map(group, z_sub)
    s_profile = profile(quotient_s)
    record(
        "l",
        quotient_s.order == p**r * q
        and s_profile.exponent == p * q
        and s_profile.phi == 0,
        f"|G/Z| = {quotient_s.order} (want {p**r * q}), exp = {s_profile.exponent} "
        f"(want {p * q}), phi = {s_profile.phi} (want 0)",
    )

    # (m) lattice of S decomposes as L(P1) + conjugates of Q1 + S
    def image_subgroup(sub: Subgroup) -> Subgroup:
        mask = bytearray(quotient_s.order)
        for x in sub.elements():
            mask[coset_id[x]] = 1
        return Subgroup.from_mask(quotient_s, bytes(mask))

    p1 = image_subgroup(big_p)
    q1 = image_subgroup(big_q)
    s_lattice = all_subgroups(quotient_s)
    p1 = s_lattice.subgroups[s_lattice.index_of_bits(p1.bits)]
    q1 = s_lattice.subgroups[s_lattice.index_of_bits(q1.bits)]
    record(
        "m",
        verify_schmidt_lattice(quotient_s, s_lattice, p1, q1),
        f"L(S) decomposition with |P1| = {p1.order}, |Q1| = {q1.order}",
    )

    return SchmidtCertificate(
        group=group,
        p=p,
        q=q,
        m=m,
        n=n,
        r=r,
        y=y,
        sylow_p=big_p,
        sylow_q=big_q,
        center=z_sub,
        frattini=phi_g,
        derived=g_derived,
        frattini_of_p=phi_p,
        quotient_s=quotient_s,
        p1=p1,
        q1=q1,
        checklist=tuple(checklist),
    )
