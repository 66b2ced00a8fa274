"""Permutations on {0..d-1} and breadth-first closure of generator sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, InvalidSpec


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..d-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.images)
        if d == 0 or set(self.images) != set(range(d)):
            raise InvalidSpec(f"not a permutation of 0..{d - 1}: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree or point in seen:
                    raise InvalidSpec(f"bad cycle point {point} in {cycles!r}")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (self * other)(i) = self(other(i))."""
        if other.degree != self.degree:
            raise InvalidSpec("cannot compose permutations of different degree")
        img = self.images
        return Permutation(tuple(img[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, fixed_points: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, ordered by least point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            cur = self.images[start]
            while cur != start:
                seen[cur] = True
                cycle.append(cur)
                cur = self.images[cur]
            if len(cycle) > 1 or fixed_points:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(fixed_points=True)))

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def close_generators(gens: Iterable[Permutation], cap: int) -> list[Permutation]:
    """Smallest composition-closed set containing the generators and the identity.

    Enumeration order is deterministic: breadth-first from the identity,
    right-multiplying by the generators in the given order. Element 0 is
    always the identity.

    Raises CapExceeded once the closure grows past ``cap``.
    """
    gens = list(gens)
    if not gens:
        raise InvalidSpec("close_generators requires at least one generator")
    if cap < 1:
        raise InvalidSpec(f"cap must be >= 1, got {cap}")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise InvalidSpec("generators must all have the same degree")

    identity = Permutation.identity(degree)
    elements = [identity]
    index: dict[tuple[int, ...], int] = {identity.images: 0}
    head = 0
    while head < len(elements):
        current = elements[head]
        head += 1
        for g in gens:
            nxt = current * g
            if nxt.images not in index:
                if len(elements) >= cap:
                    raise CapExceeded(
                        f"generator closure exceeded cap of {cap} elements"
                    )
                index[nxt.images] = len(elements)
                elements.append(nxt)
    return elements
