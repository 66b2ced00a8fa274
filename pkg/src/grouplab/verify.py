"""Whole-group verification: section sweeps, witnesses, condition hierarchy, suite driver.

The central claim under test for each group G: G is nilpotent exactly
when every section H/N has phi != 0. Each report carries both sides; a
mismatch is never normalized away, it is counted as a failure.

Condition hierarchy: all-sections (1) implies all-subgroups (2) implies
phi(G) != 0 (3); the reverse implications fail, which the catalog's
counterexample groups exercise.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import specs
from .errors import (
    CapExceeded,
    GroupLabError,
    InvalidSpec,
    LatticeCapExceeded,
    NilpotencyTestDisagreement,
)
from .groups import DEFAULT_CAP, FiniteGroup, build_group
from .invariants import GroupProfile, phi, profile
from .lattice import DEFAULT_LATTICE_CAP, SubgroupLattice, all_subgroups
from .nilpotency import is_schmidt, nilpotency_checked, schmidt_certificate
from .sections import Section, as_group, sections


@dataclass(frozen=True)
class TheoremReport:
    """Verification record for one group."""

    group: str
    order: int
    nilpotent: bool
    nilpotency_class: int | None
    sections_checked: int
    all_sections_phi_nonzero: bool
    witness_identifier: str | None
    witness_profile: GroupProfile | None
    condition2: bool
    condition3: bool
    elapsed_s: float

    @property
    def theorem_consistent(self) -> bool:
        return self.nilpotent == self.all_sections_phi_nonzero

    def to_json_dict(self) -> dict:
        witness = None
        if self.witness_identifier is not None:
            witness = {
                "profile": self.witness_profile.to_json_dict(),
                "section": self.witness_identifier,
            }
        return {
            "all_sections_phi_nonzero": self.all_sections_phi_nonzero,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "elapsed_s": round(self.elapsed_s, 6),
            "group": self.group,
            "nilpotency_class": self.nilpotency_class,
            "nilpotent": self.nilpotent,
            "order": self.order,
            "sections_checked": self.sections_checked,
            "witness": witness,
        }


def verify_theorem(
    group: FiniteGroup,
    lattice: SubgroupLattice | None = None,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> TheoremReport:
    """Run both nilpotency tests and the exhaustive all-sections phi sweep.

    No section is skipped and no profile-based deduplication is applied;
    the witness search with short-cuts lives in ``find_witness``.
    """
    start = time.perf_counter()
    if lattice is None:
        lattice = all_subgroups(group, cap=lattice_cap)
    nilpotent, nil_class = nilpotency_checked(group, lattice)
    checked = 0
    all_nonzero = True
    witness_id: str | None = None
    witness_profile: GroupProfile | None = None
    condition2 = True
    for section in sections(group, lattice):
        quotient_profile = profile(section.quotient)
        checked += 1
        if quotient_profile.phi == 0:
            all_nonzero = False
            if witness_id is None:
                witness_id = section.identifier
                witness_profile = quotient_profile
            if section.n.order == 1:
                condition2 = False  # H/1 has the profile of the subgroup H itself
    condition3 = phi(group) != 0
    return TheoremReport(
        group=group.name,
        order=group.order,
        nilpotent=nilpotent,
        nilpotency_class=nil_class,
        sections_checked=checked,
        all_sections_phi_nonzero=all_nonzero,
        witness_identifier=witness_id,
        witness_profile=witness_profile,
        condition2=condition2,
        condition3=condition3,
        elapsed_s=time.perf_counter() - start,
    )


def find_witness(
    group: FiniteGroup, lattice: SubgroupLattice | None = None
) -> Section | None:
    """First section in enumeration order whose quotient has phi = 0.

    Profile memoization by quotient table is applied here (and only
    here): identical coset tables cannot differ in phi.
    """
    if lattice is None:
        lattice = all_subgroups(group)
    seen: dict[bytes, int] = {}
    for section in sections(group, lattice):
        key = section.quotient.flat_table().tobytes()
        cached = seen.get(key)
        if cached is None:
            cached = profile(section.quotient).phi
            seen[key] = cached
        if cached == 0:
            return section
    return None


def check_condition2(group: FiniteGroup, lattice: SubgroupLattice | None = None) -> bool:
    """True iff every subgroup, materialized as a group, has phi >= 1."""
    if lattice is None:
        lattice = all_subgroups(group)
    for sub in lattice.subgroups:
        sub_group, _ = as_group(sub)
        if profile(sub_group).phi == 0:
            return False
    return True


@dataclass(frozen=True)
class FamilyCheck:
    """One family instance with its computed phi and the expected verdict."""

    family: str
    spec_text: str
    order: int
    phi: int
    expect_zero: bool

    @property
    def ok(self) -> bool:
        return (self.phi == 0) == self.expect_zero

    def to_json_dict(self) -> dict:
        return {
            "expect_zero": self.expect_zero,
            "family": self.family,
            "group": self.spec_text,
            "ok": self.ok,
            "order": self.order,
            "phi": self.phi,
        }


def family_phi_checks(max_n: int, cap: int | None = None) -> list[FamilyCheck]:
    """phi = 0 family sweep: odd dihedral, symmetric, alternating, Frobenius instances.

    The even dihedral group of order 8 is included as an intentional
    negative control (phi > 0). The cap defaults to whatever the largest
    family instance needs.
    """
    plan: list[tuple[str, str, bool]] = []
    for odd in range(3, max_n + 1, 2):
        plan.append(("dihedral-odd", f"D({2 * odd})", True))
    plan.append(("negative-control", "D(8)", False))
    for degree in range(3, min(max_n, 7) + 1):
        plan.append(("symmetric", f"S({degree})", True))
    for degree in range(4, min(max_n, 7) + 1):
        plan.append(("alternating", f"A({degree})", True))
    frobenius = [
        "semi(C(7), C(3), action=pow2)",
        "D(10)",
        "semi(C(11), C(5), action=pow3)",
        "semi(C(13), C(3), action=pow3)",
    ]
    for text in frobenius:
        plan.append(("frobenius", text, True))

    if cap is None:
        cap = DEFAULT_CAP
        for _, text, _ in plan:
            predicted = _predicted_order(text)
            if predicted is not None:
                cap = max(cap, predicted)
    results = []
    for family, text, expect_zero in plan:
        group = build_group(specs.parse_spec(text), cap=cap)
        results.append(
            FamilyCheck(
                family=family,
                spec_text=text,
                order=group.order,
                phi=phi(group),
                expect_zero=expect_zero,
            )
        )
    return results


def _predicted_order(text: str) -> int | None:
    from .groups import spec_order

    return spec_order(specs.parse_spec(text))


# -- suite driver -------------------------------------------------------------

DEFAULT_CATALOG: tuple[str, ...] = tuple(
    [f"C({n})" for n in list(range(1, 17)) + [24, 30]]
    + [f"D({2 * n})" for n in range(3, 11)]
    + [f"S({n})" for n in range(3, 7)]
    + [f"A({n})" for n in range(4, 7)]
    + ["E(3^3)", "E(5^3)"]
    + ["prod(C(6), S(3))", "prod(C(2), A(4))"]
    + ["semi(C(7), C(3), action=pow2)", "semi(prod(C(5), C(5)), C(3), action=cyclo3)"]
    + ["G375"]
)


def _family_expectation(spec: specs.GroupSpec) -> bool | None:
    """Expected phi-is-zero verdict when the spec matches a named family."""
    match spec:
        case specs.Dihedral(order) if (order // 2) % 2 == 1 and order >= 6:
            return True
        case specs.Symmetric(n) if n >= 3:
            return True
        case specs.Alternating(n) if n >= 4:
            return True
    return None


def _error_kind(exc: Exception) -> str:
    if isinstance(exc, (CapExceeded, LatticeCapExceeded)):
        return "cap"
    if isinstance(exc, NilpotencyTestDisagreement):
        return "disagreement"
    if isinstance(exc, InvalidSpec):
        return "input"
    if isinstance(exc, GroupLabError):
        return "engine"
    return "internal"


def _suite_entry(spec_text: str, cap: int, lattice_cap: int) -> dict:
    """Verify one catalog line; exceptions become error entries, never aborts."""
    entry: dict = {
        "certificate": None,
        "error": None,
        "error_kind": None,
        "family_ok": None,
        "group": spec_text,
        "report": None,
        "schmidt": None,
    }
    try:
        spec = specs.parse_spec(spec_text)
        group = build_group(spec, cap=cap)
        lattice = all_subgroups(group, cap=lattice_cap)
        report = verify_theorem(group, lattice)
        entry["report"] = report.to_json_dict()
        schmidt = is_schmidt(group, lattice)
        entry["schmidt"] = schmidt
        if schmidt:
            entry["certificate"] = schmidt_certificate(group, lattice).to_json_dict()
        expectation = _family_expectation(spec)
        if expectation is not None:
            entry["family_ok"] = (not report.condition3) == expectation
    except Exception as exc:  # recorded, suite continues
        entry["error"] = f"{type(exc).__name__}: {exc}"
        entry["error_kind"] = _error_kind(exc)
    return entry


def run_suite(
    catalog: list[str] | tuple[str, ...],
    cap: int = DEFAULT_CAP,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    jobs: int = 1,
) -> dict:
    """Verify every catalog entry; aggregate a JSON-ready suite report.

    Failures (theorem mismatches, nilpotency-test disagreements, family
    expectation violations) drive the nonzero exit status; per-group
    errors are recorded without aborting the suite. Results are merged in
    catalog order regardless of the worker count.
    """
    start = time.perf_counter()
    texts = list(catalog)
    if jobs > 1 and len(texts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(
                pool.map(_suite_entry, texts, [cap] * len(texts), [lattice_cap] * len(texts))
            )
    else:
        entries = [_suite_entry(text, cap, lattice_cap) for text in texts]

    disagreements = sum(1 for e in entries if e["error_kind"] == "disagreement")
    mismatches = sum(
        1
        for e in entries
        if e["report"] is not None
        and e["report"]["nilpotent"] != e["report"]["all_sections_phi_nonzero"]
    )
    family_violations = sum(1 for e in entries if e["family_ok"] is False)
    failures = mismatches + disagreements + family_violations
    return {
        "reports": entries,
        "summary": {
            "disagreements": disagreements,
            "failures": failures,
            "groups": len(entries),
            "wall_time_s": round(time.perf_counter() - start, 6),
        },
    }
