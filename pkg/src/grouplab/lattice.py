"""Subgroup enumeration and lattice-level queries.

Subgroups are membership bit vectors over the parent group's element
indices. The full lattice is computed by seeding with every cyclic
subgroup and closing under pairwise join (closure of the union); every
subgroup of a finite group is a join of cyclic subgroups, so the fixpoint
is the complete lattice.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ._kernels import K
from .arith import is_prime, prime_factorization
from .errors import LatticeCapExceeded
from .groups import FiniteGroup

DEFAULT_LATTICE_CAP = 100_000


def _mask_bits(mask: bytes) -> int:
    packed = np.packbits(np.frombuffer(mask, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass
class Subgroup:
    """Membership bit vector over a parent group, with cached flags.

    ``normal`` and ``maximal`` are tri-state: True/False once known,
    None while undetermined.
    """

    parent: FiniteGroup
    mask: bytes
    bits: int
    order: int
    gens: tuple[int, ...] = ()
    normal: bool | None = None
    maximal: bool | None = None
    _elems: array | None = field(default=None, repr=False)

    @classmethod
    def from_mask(
        cls,
        parent: FiniteGroup,
        mask: bytes,
        gens: tuple[int, ...] = (),
        normal: bool | None = None,
    ) -> "Subgroup":
        return cls(
            parent=parent,
            mask=mask,
            bits=_mask_bits(mask),
            order=mask.count(1),
            gens=gens,
            normal=normal,
        )

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        mask = bytes([1]) + bytes(parent.order - 1)
        return cls.from_mask(parent, mask, normal=True)

    @classmethod
    def full(cls, parent: FiniteGroup) -> "Subgroup":
        mask = bytes([1]) * parent.order
        return cls.from_mask(parent, mask, gens=parent.generators, normal=True)

    def elements(self) -> array:
        if self._elems is None:
            self._elems = array("i", [x for x in range(self.parent.order) if self.mask[x]])
        return self._elems

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.bits & self.bits == other.bits

    def generators(self) -> tuple[int, ...]:
        """A small generating set (computed greedily if not already known)."""
        if self.gens or self.order == 1:
            return self.gens
        table, _ = self.parent.kernel_handles()
        n = self.parent.order
        gens: list[int] = []
        closed = bytes([1]) + bytes(n - 1)
        for x in self.elements():
            if not closed[x]:
                gens.append(x)
                closed, _ = K.subgroup_closure(table, n, array("i", [0]), array("i", gens))
                if closed == self.mask:
                    break
        self.gens = tuple(gens)
        return self.gens

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


@dataclass
class SubgroupLattice:
    """All subgroups of a group, sorted by (order, bit vector)."""

    parent: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    _index_by_bits: dict[int, int] = field(default_factory=dict, repr=False)
    _inclusions: tuple[tuple[int, int], ...] | None = field(default=None, repr=False)
    _maximal_done: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if not self._index_by_bits:
            self._index_by_bits = {s.bits: i for i, s in enumerate(self.subgroups)}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.subgroups)

    def index_of_bits(self, bits: int) -> int | None:
        return self._index_by_bits.get(bits)

    def find(self, mask: bytes) -> Subgroup | None:
        idx = self._index_by_bits.get(_mask_bits(mask))
        return None if idx is None else self.subgroups[idx]

    def trivial_subgroup(self) -> Subgroup:
        return self.subgroups[0]

    def whole_group(self) -> Subgroup:
        return self.subgroups[-1]

    def inclusions(self) -> tuple[tuple[int, int], ...]:
        """All proper-inclusion pairs (i, j) with subgroup i < subgroup j."""
        if self._inclusions is None:
            pairs = []
            subs = self.subgroups
            for i, a in enumerate(subs):
                for j, b in enumerate(subs):
                    if a.order < b.order and b.contains_subgroup(a):
                        pairs.append((i, j))
            self._inclusions = tuple(pairs)
        return self._inclusions

    def counts_by_order(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.subgroups:
            counts[s.order] = counts.get(s.order, 0) + 1
        return counts

    def summary(self) -> dict:
        maximal = maximal_subgroups(self.parent, self)
        return {
            "by_order": {str(k): v for k, v in sorted(self.counts_by_order().items())},
            "maximal_count": len(maximal),
            "normal_count": sum(1 for s in self.subgroups if s.normal),
            "subgroup_count": len(self.subgroups),
        }

    # closure properties (asserted by the test suite)

    def is_conjugation_closed(self) -> bool:
        table, inv = self.parent.kernel_handles()
        n = self.parent.order
        for s in self.subgroups:
            for g in self.parent.generators:
                conj = K.conjugate_mask(table, inv, n, s.mask, g)
                if _mask_bits(conj) not in self._index_by_bits:
                    return False
        return True

    def is_intersection_closed(self) -> bool:
        bit_sets = [s.bits for s in self.subgroups]
        known = set(bit_sets)
        for i, a in enumerate(bit_sets):
            for b in bit_sets[i + 1 :]:
                if a & b not in known:
                    return False
        return True


def all_subgroups(group: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Enumerate every subgroup: cyclic seeds, then pairwise-join closure.

    Raises LatticeCapExceeded when more than ``cap`` subgroups appear.
    """
    table, _ = group.kernel_handles()
    n = group.order
    subs: list[Subgroup] = []
    seen: set[bytes] = set()

    def add(mask: bytes, gens: tuple[int, ...]) -> None:
        if mask in seen:
            return
        if len(subs) >= cap:
            raise LatticeCapExceeded(
                f"{group.name}: more than {cap} subgroups (raise the lattice cap?)"
            )
        seen.add(mask)
        subs.append(Subgroup.from_mask(group, mask, gens=gens))

    identity_seed = array("i", [0])
    for x in range(n):
        mask, used = K.subgroup_closure(table, n, identity_seed, array("i", [x]))
        add(mask, (x,) if used[0] else ())

    # join-closure: pairing against cyclic seeds suffices, since every
    # subgroup is a join of cyclic subgroups built up one seed at a time
    n_seeds = len(subs)
    j = 1
    while j < len(subs):
        b = subs[j]
        for i in range(min(j, n_seeds)):
            a = subs[i]
            meet = a.bits & b.bits
            if meet == a.bits or meet == b.bits:
                continue  # nested pair: join is the bigger one, already present
            big, small = (a, b) if a.order >= b.order else (b, a)
            gens_arg = array("i", big.gens + small.gens)
            mask, used = K.subgroup_closure(table, n, big.elements(), gens_arg)
            if mask not in seen:
                kept = tuple(
                    g for g, u in zip(small.gens, used[len(big.gens) :]) if u
                )
                add(mask, big.gens + kept)
        j += 1

    subs.sort(key=lambda s: (s.order, s.mask))
    table_handles = group.kernel_handles()
    for s in subs:
        s.normal = K.is_normal_mask(
            table_handles[0], table_handles[1], n, s.mask, array("i", group.generators)
        )
    return SubgroupLattice(parent=group, subgroups=tuple(subs))


def is_normal(group: FiniteGroup, subgroup: Subgroup) -> bool:
    """True iff gHg^-1 = H for all g (checked on generators, which suffices)."""
    if subgroup.normal is not None:
        return subgroup.normal
    table, inv = group.kernel_handles()
    result = K.is_normal_mask(
        table, inv, group.order, subgroup.mask, array("i", group.generators)
    )
    subgroup.normal = result
    return result


def conjugate_subgroup(group: FiniteGroup, subgroup: Subgroup, g: int) -> Subgroup:
    table, inv = group.kernel_handles()
    mask = K.conjugate_mask(table, inv, group.order, subgroup.mask, g)
    return Subgroup.from_mask(group, mask)


def conjugacy_orbit_masks(group: FiniteGroup, subgroup: Subgroup) -> list[bytes]:
    """All conjugates of a subgroup (masks), found by generator conjugation."""
    table, inv = group.kernel_handles()
    n = group.order
    seen = {subgroup.mask}
    queue = [subgroup.mask]
    head = 0
    while head < len(queue):
        mask = queue[head]
        head += 1
        for g in group.generators:
            conj = K.conjugate_mask(table, inv, n, mask, g)
            if conj not in seen:
                seen.add(conj)
                queue.append(conj)
    return queue


def maximal_subgroups(group: FiniteGroup, lattice: SubgroupLattice) -> list[Subgroup]:
    """Proper subgroups with nothing strictly between them and the group."""
    if not lattice._maximal_done:
        subs = lattice.subgroups
        proper = [s for s in subs if s.order < group.order]
        for s in subs:
            s.maximal = False
        for h in proper:
            h.maximal = not any(
                k.order > h.order and k.order < group.order and k.contains_subgroup(h)
                for k in proper
            )
        lattice.whole_group().maximal = False
        lattice._maximal_done = True
    return [s for s in lattice.subgroups if s.maximal]


def frattini(group: FiniteGroup, lattice: SubgroupLattice) -> Subgroup:
    """Intersection of all maximal subgroups."""
    maximal = maximal_subgroups(group, lattice)
    if not maximal:  # trivial group: no proper subgroups, empty intersection = G
        return lattice.whole_group()
    bits = maximal[0].bits
    for m in maximal[1:]:
        bits &= m.bits
    idx = lattice.index_of_bits(bits)
    if idx is None:
        raise AssertionError("frattini intersection missing from a complete lattice")
    return lattice.subgroups[idx]


def sylow_subgroups(group: FiniteGroup, lattice: SubgroupLattice, p: int) -> list[Subgroup]:
    """All subgroups of order = the largest power of p dividing |G|.

    When p does not divide |G| this is the trivial subgroup alone.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = 1
    n = group.order
    while n % p == 0:
        target *= p
        n //= p
    return [s for s in lattice.subgroups if s.order == target]


def _has_cyclic_subgroup_of_order(
    group: FiniteGroup, lattice: SubgroupLattice, order: int
) -> bool:
    table, _ = group.kernel_handles()
    orders = K.element_orders(table, group.order)
    return any(
        s.order == order and any(orders[x] == order for x in s.elements())
        for s in lattice.subgroups
    )


def verify_schmidt_lattice(
    group: FiniteGroup, lattice: SubgroupLattice, p1: Subgroup, q1: Subgroup
) -> bool:
    """Check the minimal-non-nilpotent quotient's lattice decomposition.

    True iff every subgroup is contained in P1, or is a conjugate of Q1,
    or is the whole group -- with all conjugates of Q1 present -- and the
    lattice has no cyclic subgroup of order p*q (the decomposition's
    consequence; this conjunct is what rules out e.g. the cyclic group of
    order 6, where the set equality alone would hold).
    """
    p_factors = prime_factorization(p1.order) if p1.order > 1 else {}
    if len(p_factors) != 1:
        return False
    p = next(iter(p_factors))
    q = q1.order
    if not is_prime(q) or q == p:
        return False
    conjugates = set(conjugacy_orbit_masks(group, q1))
    for mask in conjugates:
        if lattice.find(mask) is None:
            return False
    for s in lattice.subgroups:
        if p1.contains_subgroup(s):
            continue
        if s.order == group.order:
            continue
        if s.mask in conjugates:
            continue
        return False
    return not _has_cyclic_subgroup_of_order(group, lattice, p * q)
