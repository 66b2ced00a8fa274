"""Per-element and per-group invariants: orders, exponent, phi, center, derived subgroup.

``phi(G)`` counts the elements whose order equals the exponent of G; a
finite group has such elements exactly when its element-order lcm is
attained, which is what the nilpotency verification hinges on.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

from ._kernels import K
from .groups import FiniteGroup
from .lattice import Subgroup


@dataclass(frozen=True)
class GroupProfile:
    """Invariant fingerprint: order, exponent, phi and the element-order histogram."""

    order: int
    exponent: int
    phi: int
    histogram: tuple[tuple[int, int], ...]  # (element order, count), ascending

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.histogram)

    def to_json_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "histogram": {str(k): v for k, v in self.histogram},
            "order": self.order,
            "phi": self.phi,
        }


def element_order(group: FiniteGroup, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    if not 0 <= x < group.order:
        raise IndexError(f"element index {x} out of range for {group.name}")
    k = 1
    cur = x
    while cur != 0:
        cur = group.mul(cur, x)
        k += 1
    return k


def element_orders_via_cycles(group: FiniteGroup) -> list[int]:
    """Element orders from cycle structure; only for permutation-backed groups."""
    perms = group.as_permutations()
    return [p.order() for p in perms]


def _all_orders(group: FiniteGroup) -> list[int]:
    if group._flat is None and group._scratch is None and group.order > 512:
        # permutation route: avoids materializing a dense table
        return element_orders_via_cycles(group)
    table, _ = group.kernel_handles()
    return list(K.element_orders(table, group.order))


def profile(group: FiniteGroup) -> GroupProfile:
    """Order/exponent/phi/histogram of a group (memoized on the group)."""
    cached = group._profile
    if cached is not None:
        return cached
    orders = _all_orders(group)
    histogram: dict[int, int] = {}
    for o in orders:
        histogram[o] = histogram.get(o, 0) + 1
    exponent = math.lcm(*histogram.keys())
    result = GroupProfile(
        order=group.order,
        exponent=exponent,
        phi=histogram.get(exponent, 0),
        histogram=tuple(sorted(histogram.items())),
    )
    group._profile = result
    return result


def exponent(group: FiniteGroup) -> int:
    """lcm of all element orders (computed from the full histogram)."""
    return profile(group).exponent


def phi(group: FiniteGroup) -> int:
    """Number of elements whose order equals the group exponent."""
    return profile(group).phi


def center(group: FiniteGroup) -> Subgroup:
    """Subgroup of elements commuting with everything; always normal."""
    table, _ = group.kernel_handles()
    mask = K.center_mask(table, group.order)
    return Subgroup.from_mask(group, mask, normal=True)


def derived_subgroup(group: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators x^-1 y^-1 x y; normal in G."""
    table, inv = group.kernel_handles()
    n = group.order
    full = bytes([1]) * n
    comm = K.commutator_set(table, inv, n, full, full)
    seeds = array("i", [x for x in range(n) if comm[x]])
    mask, used = K.subgroup_closure(table, n, array("i", [0]), seeds)
    gens = tuple(s for s, u in zip(seeds, used) if u)
    return Subgroup.from_mask(group, mask, gens=gens, normal=True)


def derived_series(group: FiniteGroup) -> list[Subgroup]:
    """Iterated derived subgroups until stabilization (trivial iff solvable)."""
    from .sections import as_group  # local import: sections depends on this module

    current_group = group
    chain: list[tuple[FiniteGroup, Subgroup]] = []
    while True:
        derived = derived_subgroup(current_group)
        chain.append((current_group, derived))
        if derived.order == current_group.order or derived.order == 1:
            break
        current_group, _ = as_group(derived)
    # map each step's subgroup back into the original group's indexing
    mapped: list[Subgroup] = [Subgroup.full(group)]
    carrier = list(range(group.order))
    for parent, derived in chain:
        abs_elems = [carrier[x] for x in derived.elements()]
        mask = bytearray(group.order)
        for x in abs_elems:
            mask[x] = 1
        mapped.append(Subgroup.from_mask(group, bytes(mask)))
        if derived.order == parent.order or derived.order == 1:
            break
        carrier = abs_elems
    return mapped
