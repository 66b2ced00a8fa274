"""Fully enumerated finite groups and their constructors.

A ``FiniteGroup`` is an index set {0..n-1} with the identity at index 0.
Groups of order <= 512 store an explicit flat n*n multiplication table
(cache-friendly for the enumeration loops); larger groups keep
permutation elements and compose on demand, materializing a dense
"scratch" table lazily when analysis needs one.

Constructors cover cyclic, dihedral, symmetric, alternating and
extraspecial-type groups, direct and semidirect products, the order-375
non-CLT group, and ingestion of plain-text Cayley tables (which are never
trusted: every axiom is re-verified on load).
"""

from __future__ import annotations

import math
from array import array
from pathlib import Path
from typing import Sequence

import numpy as np

from . import specs
from ._kernels import K
from .errors import CapExceeded, InvalidAction, InvalidSpec
from .perms import Permutation, close_generators

TABLE_LIMIT = 512  # orders above this are permutation-backed
SCRATCH_LIMIT = 2048  # largest order for which a dense analysis table is built
DEFAULT_CAP = 5000  # default enumeration cap for build_group
_ASSOC_EXHAUSTIVE_LIMIT = 200
_ASSOC_SAMPLE_SEED = 0x5EED


class FiniteGroup:
    """Immutable fully enumerated finite group with identity at index 0."""

    def __init__(
        self,
        *,
        name: str,
        order: int,
        flat: np.ndarray | None = None,
        perms: list[Permutation] | None = None,
        generators: tuple[int, ...] = (),
        labels: tuple[str, ...] | None = None,
        validate: bool = True,
    ) -> None:
        if flat is None and perms is None:
            raise InvalidSpec("a group needs a multiplication table or permutations")
        self.name = name
        self.order = order
        self.identity = 0
        self.generators = generators
        self.labels = labels
        self._flat = flat
        self._perms = perms
        self._perm_index = (
            {p.images: i for i, p in enumerate(perms)} if perms is not None else None
        )
        self._scratch: np.ndarray | None = None
        self._ktable = None
        self._kinv = None
        self._profile = None  # memoized by invariants.profile
        if flat is not None:
            if validate:
                _validate_table(flat, order)
            self._inv = _inverse_table(flat, order)
        else:
            self._inv = self._inverses_from_perms()
        if not generators and order > 1:
            self.generators = self._greedy_generators()

    # -- core operations ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._flat is not None:
            return int(self._flat[a * self.order + b])
        if self._scratch is not None:
            return int(self._scratch[a * self.order + b])
        prod = self._perms[a] * self._perms[b]
        return self._perm_index[prod.images]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    # -- dense table access ----------------------------------------------

    def flat_table(self) -> np.ndarray:
        """Flat n*n multiplication table (built lazily for permutation groups)."""
        if self._flat is not None:
            return self._flat
        if self._scratch is None:
            if self.order > SCRATCH_LIMIT:
                raise CapExceeded(
                    f"group {self.name} (order {self.order}) is too large for a "
                    f"dense multiplication table (limit {SCRATCH_LIMIT})"
                )
            self._scratch = _flat_from_perms(self._perms, validate="light")
        return self._scratch

    def kernel_handles(self):
        """Backend-specific (table, inverse) handles for kernel calls."""
        if self._ktable is None:
            self._ktable = K.prepare_table(self.flat_table())
            self._kinv = K.prepare_vector(self._inv)
        return self._ktable, self._kinv

    def is_abelian(self) -> bool:
        n = self.order
        if self._flat is not None or self._scratch is not None or n <= SCRATCH_LIMIT:
            t = self.flat_table().reshape(n, n)
            return bool(np.array_equal(t, t.T))
        return all(
            self.mul(a, b) == self.mul(b, a) for a in range(n) for b in range(a + 1, n)
        )

    def as_permutations(self) -> list[Permutation]:
        """Stored permutations, or the left-regular representation."""
        if self._perms is not None:
            return self._perms
        n = self.order
        t = self.flat_table()
        return [Permutation(tuple(int(x) for x in t[a * n : (a + 1) * n])) for a in range(n)]

    # -- internals --------------------------------------------------------

    def _inverses_from_perms(self) -> array:
        inv = array("i", bytes(4 * self.order))
        for i, p in enumerate(self._perms):
            j = self._perm_index.get(p.inverse().images)
            if j is None:
                raise InvalidSpec(f"element set of {self.name} not closed under inverse")
            inv[i] = j
        if not self._perms[0].is_identity():
            raise InvalidSpec(f"element 0 of {self.name} is not the identity")
        return inv

    def _greedy_generators(self) -> tuple[int, ...]:
        table, _ = self.kernel_handles()
        n = self.order
        gens: list[int] = []
        mask = bytes([1] + [0] * (n - 1))
        for x in range(1, n):
            if not mask[x]:
                gens.append(x)
                mask, _ = K.subgroup_closure(table, n, array("i", [0]), array("i", gens))
                if mask.count(1) == n:
                    break
        return tuple(gens)


def _validate_table(flat: np.ndarray, n: int, assoc_samples: int | None = None) -> None:
    """Re-verify every group axiom on a table; nothing is trusted.

    Associativity: exhaustive for n <= 200, else >= 10 n^2 sampled triples
    with a fixed seed. ``assoc_samples`` overrides the sample count for
    internally derived tables whose products come from verified structure.
    """
    if flat.shape != (n * n,):
        raise InvalidSpec(f"multiplication table has {flat.size} entries, expected {n * n}")
    t = flat.reshape(n, n)
    if flat.size and (int(flat.min()) < 0 or int(flat.max()) >= n):
        raise InvalidSpec("closure violated: table entry out of range")
    rng = np.arange(n)
    if not (np.array_equal(t[0], rng) and np.array_equal(t[:, 0], rng)):
        raise InvalidSpec("element 0 is not a two-sided identity")
    pos = np.argwhere(t == 0)
    if pos.shape[0] != n or not np.array_equal(np.sort(pos[:, 0]), rng):
        raise InvalidSpec("inverses violated: some element has no unique right inverse")
    inv = np.empty(n, dtype=np.int64)
    inv[pos[:, 0]] = pos[:, 1]
    if not np.array_equal(t[inv, rng], np.zeros(n, dtype=t.dtype)):
        raise InvalidSpec("inverses violated: right inverse is not a left inverse")
    table = K.prepare_table(flat)
    if n <= _ASSOC_EXHAUSTIVE_LIMIT and assoc_samples is None:
        if not K.assoc_exhaustive(table, n):
            raise InvalidSpec("associativity violated")
    else:
        count = assoc_samples if assoc_samples is not None else 10 * n * n
        gen = np.random.Generator(np.random.PCG64(_ASSOC_SAMPLE_SEED))
        abc = gen.integers(0, n, size=(3, count), dtype=np.int32)
        if not K.assoc_sampled(table, n, abc[0], abc[1], abc[2]):
            raise InvalidSpec("associativity violated (sampled)")


def _inverse_table(flat: np.ndarray, n: int) -> array:
    t = flat.reshape(n, n)
    pos = np.argwhere(t == 0)
    inv = array("i", bytes(4 * n))
    for a, b in pos:
        inv[int(a)] = int(b)
    return inv


def group_from_flat(
    name: str,
    flat: np.ndarray,
    order: int,
    generators: tuple[int, ...] = (),
    labels: tuple[str, ...] | None = None,
    validate: bool = True,
) -> FiniteGroup:
    """Build a group from a dense table, switching representation by size.

    Orders above TABLE_LIMIT store the rows as permutations (the left-
    regular representation) and keep the table as the analysis scratch.
    """
    if order <= TABLE_LIMIT:
        return FiniteGroup(
            name=name, order=order, flat=flat, generators=generators,
            labels=labels, validate=validate,
        )
    if validate:
        _validate_table(flat, order)
    perms = [
        Permutation(tuple(int(x) for x in flat[a * order : (a + 1) * order]))
        for a in range(order)
    ]
    group = FiniteGroup(
        name=name, order=order, perms=perms, generators=generators, labels=labels
    )
    group._scratch = flat
    return group


def _flat_from_perms(perms: list[Permutation], validate: str) -> np.ndarray:
    """Dense multiplication table from composition of stored permutations.

    ``validate`` is "policy" (full axiom check), "light" (axioms with a
    capped associativity sample; composition itself is associative, the
    check guards the index-lookup assembly) or "off".
    """
    n = len(perms)
    arr = np.array([p.images for p in perms], dtype=np.int32)
    index = {row.tobytes(): i for i, row in enumerate(arr)}
    flat = np.empty(n * n, dtype=np.int32)
    for i in range(n):
        products = arr[i][arr]  # row j = perms[i] composed with perms[j]
        base = i * n
        for j in range(n):
            k = index.get(products[j].tobytes())
            if k is None:
                raise InvalidSpec("permutation set is not closed under composition")
            flat[base + j] = k
    if validate == "policy":
        _validate_table(flat, n)
    elif validate == "light":
        _validate_table(flat, n, assoc_samples=min(10 * n * n, 200_000))
    return flat


# -- constructors ---------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"cyclic group order must be >= 1, got {n}")
    if n <= TABLE_LIMIT:
        rng = np.arange(n, dtype=np.int32)
        flat = ((rng[:, None] + rng[None, :]) % n).reshape(-1)
        return FiniteGroup(
            name=f"C({n})",
            order=n,
            flat=flat,
            generators=(1,) if n > 1 else (),
            labels=tuple(str(i) for i in range(n)),
            validate=False,  # derived directly from modular addition
        )
    gen = Permutation(tuple((i + 1) % n for i in range(n)))
    elems = close_generators([gen], cap=n)
    return FiniteGroup(
        name=f"C({n})", order=n, perms=elems, generators=(1,),
        labels=tuple(str(i) for i in range(n)),
    )


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order; D(2n) has 2n elements."""
    if order < 2 or order % 2:
        raise InvalidSpec(f"dihedral order must be even and >= 2, got {order}")
    m = order // 2  # rotation count
    if order <= TABLE_LIMIT:
        flat = np.empty(order * order, dtype=np.int32)
        for t1 in range(2):
            for k1 in range(m):
                a = t1 * m + k1
                for t2 in range(2):
                    for k2 in range(m):
                        k = (k1 + k2) % m if t1 == 0 else (k1 - k2) % m
                        flat[a * order + t2 * m + k2] = ((t1 + t2) % 2) * m + k
        labels = tuple(f"r{k}" for k in range(m)) + tuple(f"sr{k}" for k in range(m))
        gens = (1, m) if m > 1 else (m,)
        return FiniteGroup(
            name=f"D({order})", order=order, flat=flat, generators=gens, labels=labels
        )
    rot = Permutation(tuple((i + 1) % m for i in range(m)))
    ref = Permutation(tuple((-i) % m for i in range(m)))
    elems = close_generators([rot, ref], cap=order)
    index = {p.images: i for i, p in enumerate(elems)}
    return FiniteGroup(
        name=f"D({order})", order=order, perms=elems,
        generators=(index[rot.images], index[ref.images]),
        labels=tuple(p.cycle_string() for p in elems),
    )


def _perm_group(name: str, degree: int, gens: list[Permutation], order: int) -> FiniteGroup:
    elems = close_generators(gens or [Permutation.identity(degree)], cap=order)
    if len(elems) != order:
        raise InvalidSpec(f"{name}: closure produced {len(elems)} elements, expected {order}")
    index = {p.images: i for i, p in enumerate(elems)}
    gen_idx = tuple(index[g.images] for g in gens if not g.is_identity())
    labels = tuple(p.cycle_string() for p in elems)
    if order <= TABLE_LIMIT:
        flat = _flat_from_perms(elems, validate="policy")
        group = FiniteGroup(
            name=name, order=order, flat=flat, generators=gen_idx, labels=labels,
            validate=False,  # just validated above
        )
        group._perms = elems
        group._perm_index = index
        return group
    return FiniteGroup(name=name, order=order, perms=elems, generators=gen_idx, labels=labels)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"symmetric group degree must be >= 1, got {n}")
    gens: list[Permutation] = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    if n >= 3:
        gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
    return _perm_group(f"S({n})", n, gens, math.factorial(n))


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"alternating group degree must be >= 1, got {n}")
    order = 1 if n < 3 else math.factorial(n) // 2
    gens: list[Permutation] = []
    if n >= 3:
        gens.append(Permutation.from_cycles(n, (0, 1, 2)))
    if n >= 4:
        if n % 2:
            gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
        else:
            gens.append(Permutation.from_cycles(n, tuple(range(1, n))))
    return _perm_group(f"A({n})", max(n, 1), gens, order)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def extraspecial(p: int) -> FiniteGroup:
    """Non-abelian group of order p^3 with center of order p.

    Realized as upper unitriangular 3x3 matrices over integers mod p,
    stored as triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b',
    c+c'+a*b'). Generators are x=(1,0,0) and y=(0,1,0); the commutator
    x^-1 y^-1 x y is the central element (0,0,1).
    """
    if not _is_prime(p):
        raise InvalidSpec(f"extraspecial construction requires a prime, got {p}")
    n = p * p * p
    if n > SCRATCH_LIMIT:
        raise CapExceeded(f"extraspecial group of order {n} exceeds the dense-table limit")
    flat = np.empty(n * n, dtype=np.int32)
    for a1 in range(p):
        for b1 in range(p):
            for c1 in range(p):
                e1 = (a1 * p + b1) * p + c1
                base = e1 * n
                for a2 in range(p):
                    for b2 in range(p):
                        col = ((a1 + a2) % p * p + (b1 + b2) % p) * p
                        cc = c1 + a1 * b2
                        for c2 in range(p):
                            flat[base + (a2 * p + b2) * p + c2] = col + (cc + c2) % p
    labels = tuple(
        f"({a},{b},{c})" for a in range(p) for b in range(p) for c in range(p)
    )
    gens = (p * p, p)  # x=(1,0,0), y=(0,1,0)
    return group_from_flat(f"E({p}^3)", flat, n, generators=gens, labels=labels)


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product on pairs (x, y), indexed x * |B| + y."""
    n = a.order * b.order
    name = name or f"prod({a.name}, {b.name})"
    labels = tuple(
        f"({a.label(x)}|{b.label(y)})" for x in a.elements() for y in b.elements()
    )
    gens = tuple(x * b.order for x in a.generators) + tuple(b.generators)
    if n <= TABLE_LIMIT:
        ta = a.flat_table().reshape(a.order, a.order)
        tb = b.flat_table().reshape(b.order, b.order)
        flat = (
            ta[:, None, :, None].astype(np.int64) * b.order + tb[None, :, None, :]
        ).reshape(-1).astype(np.int32)
        return FiniteGroup(
            name=name, order=n, flat=flat, generators=gens, labels=labels
        )
    pa = a.as_permutations()
    pb = b.as_permutations()
    da = pa[0].degree
    perms = [
        Permutation(pa[x].images + tuple(i + da for i in pb[y].images))
        for x in a.elements()
        for y in b.elements()
    ]
    return FiniteGroup(name=name, order=n, perms=perms, generators=gens, labels=labels)


def _extend_homomorphism(n_group: FiniteGroup, images: Sequence[int]) -> np.ndarray:
    """Extend generator images to the full map, verifying it is an automorphism."""
    gens = n_group.generators
    n = n_group.order
    if len(images) != len(gens):
        raise InvalidAction(
            f"expected {len(gens)} generator images for {n_group.name}, got {len(images)}"
        )
    for img in images:
        if not 0 <= img < n:
            raise InvalidAction(f"generator image {img} out of range for {n_group.name}")
    t = n_group.flat_table()
    phi = np.full(n, -1, dtype=np.int32)
    phi[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g, img in zip(gens, images):
            y = int(t[x * n + g])
            if phi[y] < 0:
                phi[y] = t[phi[x] * n + img]
                queue.append(y)
    if int(phi.min()) < 0:
        raise InvalidAction(f"generators of {n_group.name} do not reach every element")
    if not np.array_equal(np.sort(phi), np.arange(n, dtype=np.int32)):
        raise InvalidAction("generator images do not extend to a bijection")
    t2 = t.reshape(n, n)
    if not np.array_equal(t2[phi][:, phi], phi[t2]):
        raise InvalidAction("generator images do not extend to a homomorphism")
    return phi


def _action_maps(
    n_group: FiniteGroup, h_group: FiniteGroup, action: specs.ActionSpec
) -> np.ndarray:
    """Automorphism of N for every element of H, verified to be a homomorphism."""
    if len(action.generator_images) != len(h_group.generators):
        raise InvalidAction(
            f"action specifies {len(action.generator_images)} automorphisms but "
            f"{h_group.name} has {len(h_group.generators)} generators"
        )
    n = n_group.order
    nh = h_group.order
    gen_phi = [
        _extend_homomorphism(n_group, images) for images in action.generator_images
    ]
    maps = np.full((nh, n), -1, dtype=np.int32)
    maps[0] = np.arange(n, dtype=np.int32)
    seen = [False] * nh
    seen[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g, phi in zip(h_group.generators, gen_phi):
            y = h_group.mul(x, g)
            if not seen[y]:
                seen[y] = True
                maps[y] = maps[x][phi]  # alpha(x*g) = alpha(x) after alpha(g)
                queue.append(y)
    if not all(seen):
        raise InvalidAction(f"generators of {h_group.name} do not reach every element")
    for h1 in range(nh):
        for h2 in range(nh):
            if not np.array_equal(maps[h_group.mul(h1, h2)], maps[h1][maps[h2]]):
                raise InvalidAction(
                    "action does not respect the acting group's relations"
                )
    return maps


def semidirect_product(
    n_group: FiniteGroup,
    h_group: FiniteGroup,
    action: specs.ActionSpec | str,
    name: str | None = None,
) -> FiniteGroup:
    """Semidirect product N x| H with (n1,h1)(n2,h2) = (n1 * (h1 act n2), h1*h2)."""
    if isinstance(action, str):
        action = resolve_action(action, n_group, h_group)
    maps = _action_maps(n_group, h_group, action)
    nn, nh = n_group.order, h_group.order
    n = nn * nh
    name = name or f"semi({n_group.name}, {h_group.name})"
    labels = tuple(
        f"({n_group.label(x)}|{h_group.label(h)})"
        for x in n_group.elements()
        for h in h_group.elements()
    )
    gens = tuple(x * nh for x in n_group.generators) + tuple(h_group.generators)
    if n <= TABLE_LIMIT:
        tn = n_group.flat_table().reshape(nn, nn).astype(np.int64)
        th = h_group.flat_table().reshape(nh, nh)
        flat = np.empty((nn, nh, nn, nh), dtype=np.int32)
        for h1 in range(nh):
            acted = tn[:, maps[h1]] * nh  # rows n1, cols n2 -> (n1 * phi_h1(n2)) * nh
            for h2 in range(nh):
                flat[:, h1, :, h2] = acted + int(th[h1, h2])
        return FiniteGroup(
            name=name, order=n, flat=flat.reshape(-1), generators=gens, labels=labels
        )
    tn = n_group.flat_table()
    perms = []
    for x in n_group.elements():
        row = x * nn
        for h in h_group.elements():
            images = tuple(int(tn[row + v]) for v in maps[h]) + tuple(
                nn + h_group.mul(h, w) for w in h_group.elements()
            )
            perms.append(Permutation(images))
    return FiniteGroup(name=name, order=n, perms=perms, generators=gens, labels=labels)


def group375() -> FiniteGroup:
    """The non-CLT group of order 375: E(5^3) extended by an order-3 action.

    The acting generator maps x -> y and y -> (y x)^-1; on the (a, b)
    coordinates modulo the center this is the companion matrix of
    t^2 + t + 1 over Z_5 (determinant 1, multiplicative order 3), so the
    central commutator [x, y] is fixed.
    """
    base = extraspecial(5)
    top = cyclic(3)
    return semidirect_product(base, top, "cyclo3", name="G375")


# -- named semidirect actions ----------------------------------------------


def _action_power(k: int):
    def build(n_group: FiniteGroup, h_group: FiniteGroup) -> specs.ActionSpec:
        images = []
        for g in n_group.generators:
            img = 0
            for _ in range(k):
                img = n_group.mul(img, g)
            images.append(img)
        return specs.ActionSpec((tuple(images),) * len(h_group.generators))

    return build


def _action_invert(n_group: FiniteGroup, h_group: FiniteGroup) -> specs.ActionSpec:
    images = tuple(n_group.inv(g) for g in n_group.generators)
    return specs.ActionSpec((images,) * len(h_group.generators))


def _action_cyclo3(n_group: FiniteGroup, h_group: FiniteGroup) -> specs.ActionSpec:
    # order-3 action on a 2-generator group: g1 -> g2, g2 -> (g2 g1)^-1
    if len(n_group.generators) != 2:
        raise InvalidAction(
            f"action 'cyclo3' needs a 2-generator normal subgroup, "
            f"{n_group.name} has {len(n_group.generators)} generators"
        )
    g1, g2 = n_group.generators
    images = (g2, n_group.inv(n_group.mul(g2, g1)))
    return specs.ActionSpec((images,) * len(h_group.generators))


NAMED_ACTIONS = {
    "pow2": _action_power(2),
    "pow3": _action_power(3),
    "invert": _action_invert,
    "cyclo3": _action_cyclo3,
}


def resolve_action(name: str, n_group: FiniteGroup, h_group: FiniteGroup) -> specs.ActionSpec:
    try:
        builder = NAMED_ACTIONS[name]
    except KeyError:
        raise InvalidAction(
            f"unknown action {name!r}; built-ins: {', '.join(sorted(NAMED_ACTIONS))}"
        ) from None
    return builder(n_group, h_group)


# -- Cayley-table ingestion --------------------------------------------------


def from_cayley_text(text: str, name: str = "cayley") -> FiniteGroup:
    """Parse the plain-text Cayley format: line 1 is n, then n rows of indices.

    Lines starting with '#' are comments. Element 0 must be the identity;
    all group axioms are re-verified.
    """
    rows: list[list[int]] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise InvalidSpec(f"line {lineno}: not whitespace-separated integers") from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise InvalidSpec(f"line {lineno}: expected the group order")
            n = values[0]
        else:
            if len(values) != n:
                raise InvalidSpec(
                    f"line {lineno}: expected {n} entries, got {len(values)}"
                )
            rows.append(values)
    if n is None:
        raise InvalidSpec("empty Cayley table")
    if len(rows) != n:
        raise InvalidSpec(f"expected {n} table rows, got {len(rows)}")
    flat = np.array(rows, dtype=np.int32).reshape(-1)
    return group_from_flat(name, flat, n, validate=True)


def from_cayley_file(path: str | Path) -> FiniteGroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidSpec(f"cannot read Cayley file {path}: {exc}") from None
    return from_cayley_text(text, name=path.name)


# -- commutators --------------------------------------------------------------


def commutator(group: FiniteGroup, x: int, y: int) -> int:
    """x^-1 y^-1 x y."""
    return group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y))


# -- spec dispatch -------------------------------------------------------------


def spec_order(spec: specs.GroupSpec) -> int | None:
    """Order predicted by a spec, or None when it needs I/O (Cayley files)."""
    match spec:
        case specs.Cyclic(n):
            return n
        case specs.Dihedral(order):
            return order
        case specs.Symmetric(n):
            return math.factorial(n)
        case specs.Alternating(n):
            return 1 if n < 3 else math.factorial(n) // 2
        case specs.Extraspecial(p):
            return p**3
        case specs.Group375():
            return 375
        case specs.DirectProduct(a, b):
            left, right = spec_order(a), spec_order(b)
            return None if left is None or right is None else left * right
        case specs.SemidirectProduct(a, b, _):
            left, right = spec_order(a), spec_order(b)
            return None if left is None or right is None else left * right
        case specs.CayleyFile(_):
            return None
    raise InvalidSpec(f"unknown spec node {spec!r}")


def build_group(spec: specs.GroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Construct the group described by a spec tree, enforcing the element cap."""
    spec.check()
    predicted = spec_order(spec)
    if predicted is not None and predicted > cap:
        raise CapExceeded(
            f"group of order {predicted} exceeds the enumeration cap of {cap}"
        )
    match spec:
        case specs.Cyclic(n):
            return cyclic(n)
        case specs.Dihedral(order):
            return dihedral(order)
        case specs.Symmetric(n):
            return symmetric(n)
        case specs.Alternating(n):
            return alternating(n)
        case specs.Extraspecial(p):
            return extraspecial(p)
        case specs.Group375():
            return group375()
        case specs.DirectProduct(a, b):
            return direct_product(build_group(a, cap), build_group(b, cap))
        case specs.SemidirectProduct(a, b, action):
            return semidirect_product(build_group(a, cap), build_group(b, cap), action)
        case specs.CayleyFile(path):
            group = from_cayley_file(path)
            if group.order > cap:
                raise CapExceeded(
                    f"Cayley table of order {group.order} exceeds the cap of {cap}"
                )
            return group
    raise InvalidSpec(f"unknown spec node {spec!r}")
