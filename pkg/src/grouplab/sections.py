"""Quotient construction and section enumeration.

A section is a quotient H/N where H is any subgroup and N is normal in H.
Subgroups are re-materialized as standalone groups (elements re-indexed
ascending by parent index) before quotienting, so quotient logic never
depends on parent indexing. Coset representatives are the least element
index in each coset, making everything deterministic.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._kernels import K
from .errors import NotNormal
from .groups import FiniteGroup, group_from_flat
from .lattice import Subgroup, SubgroupLattice


def as_group(subgroup: Subgroup, name: str | None = None) -> tuple[FiniteGroup, array]:
    """Materialize a subgroup as a standalone group; returns (group, parent elements)."""
    parent = subgroup.parent
    elems = subgroup.elements()
    if subgroup.order == parent.order:
        return parent, elems
    table, _ = parent.kernel_handles()
    local_flat = K.compose_table(table, parent.order, elems)
    pos = {int(e): i for i, e in enumerate(elems)}
    gens = tuple(pos[g] for g in subgroup.generators())
    labels = tuple(parent.label(int(e)) for e in elems)
    group = group_from_flat(
        name or f"{parent.name}[{subgroup.order}]",
        np.asarray(local_flat, dtype=np.int32),
        subgroup.order,
        generators=gens,
        labels=labels,
        validate=False,  # products of a validated parent
    )
    return group, elems


def quotient_with_map(group: FiniteGroup, normal: Subgroup) -> tuple[FiniteGroup, array]:
    """Quotient group and the element->coset index map.

    Elements of the quotient are left cosets of N, numbered by ascending
    least representative; raises NotNormal when N is not normal.
    """
    if normal.parent is not group:
        raise ValueError("normal subgroup belongs to a different group")
    table, inv = group.kernel_handles()
    n = group.order
    if not K.is_normal_mask(table, inv, n, normal.mask, array("i", group.generators)):
        raise NotNormal(
            f"subgroup of order {normal.order} is not normal in {group.name}"
        )
    all_elems = array("i", range(n))
    coset_id, reps = K.coset_partition(table, n, all_elems, normal.elements())
    k = len(reps)
    flat = np.asarray(K.quotient_table(table, n, reps, coset_id), dtype=np.int32)
    gens: list[int] = []
    for g in group.generators:
        image = coset_id[g]
        if image != 0 and image not in gens:
            gens.append(image)
    labels = tuple(f"{group.label(int(r))}N" for r in reps)
    quot = group_from_flat(
        f"{group.name}/N{normal.order}",
        flat,
        k,
        generators=tuple(gens),
        labels=labels,
        validate=False,  # coset table of a validated parent
    )
    return quot, coset_id


def quotient(group: FiniteGroup, normal: Subgroup) -> FiniteGroup:
    """The quotient group of ``group`` by a normal subgroup."""
    return quotient_with_map(group, normal)[0]


@dataclass(frozen=True)
class Section:
    """A pair (H <= G, N normal in H) with the constructed quotient H/N."""

    parent: FiniteGroup
    h_index: int
    n_index: int
    h: Subgroup
    n: Subgroup
    quotient: FiniteGroup
    h_elements: array  # parent indices of H's elements, ascending
    coset_ids: array  # H-local element -> coset index

    @property
    def identifier(self) -> str:
        return f"H#{self.h_index}/N#{self.n_index}"

    def coset_of(self, parent_element: int) -> int:
        """Coset index of an element of H (given by parent index)."""
        local = {int(e): i for i, e in enumerate(self.h_elements)}[parent_element]
        return self.coset_ids[local]


def sections(group: FiniteGroup, lattice: SubgroupLattice) -> Iterator[Section]:
    """Yield every section (H, N normal in H), H then N ascending in lattice order.

    Includes the degenerate sections (H, trivial) and (H, H). Sections are
    not deduplicated up to isomorphism; the enumeration is exhaustive.
    """
    subs = lattice.subgroups
    for hi, h_sub in enumerate(subs):
        h_group, h_elems = as_group(h_sub)
        pos = {int(e): i for i, e in enumerate(h_elems)}
        h_table, h_inv = h_group.kernel_handles()
        k = h_group.order
        h_gens = array("i", h_group.generators)
        for ni, n_sub in enumerate(subs):
            if not h_sub.contains_subgroup(n_sub):
                continue
            local_mask = bytearray(k)
            for e in n_sub.elements():
                local_mask[pos[int(e)]] = 1
            local_mask = bytes(local_mask)
            if not K.is_normal_mask(h_table, h_inv, k, local_mask, h_gens):
                continue
            local_n = Subgroup.from_mask(h_group, local_mask, normal=True)
            quot, coset_id = quotient_with_map(h_group, local_n)
            yield Section(
                parent=group,
                h_index=hi,
                n_index=ni,
                h=h_sub,
                n=n_sub,
                quotient=quot,
                h_elements=h_elems,
                coset_ids=coset_id,
            )
