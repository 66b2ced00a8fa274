"""Pure-Python kernels for the hot loops.

Same semantics as the compiled backend (`grouplab._kernels.compiled`);
every function here must return byte-identical results to its compiled
twin. Multiplication tables are handled through ``prepare_table``, which
returns the backend's preferred representation (a flat Python list here,
the untouched int32 buffer for the compiled backend).

Conventions shared by both backends:
  - groups are index sets {0..n-1} with identity at index 0;
  - ``table`` is the flat n*n multiplication table, ``table[a*n+b] = a*b``;
  - subgroup masks are ``bytes`` of length n with values 0/1.
"""

from __future__ import annotations

from array import array

BACKEND = "pure"


def prepare_table(flat) -> list:
    """Convert a flat int32 buffer to this backend's table representation."""
    if isinstance(flat, list):
        return flat
    # tolist() yields plain ints; list() on a numpy array would yield numpy
    # scalars, which are far slower in the inner loops below
    return flat.tolist() if hasattr(flat, "tolist") else list(flat)


def prepare_vector(vec) -> list:
    """Convert an int vector (e.g. the inverse table) for this backend."""
    if isinstance(vec, list):
        return vec
    return vec.tolist() if hasattr(vec, "tolist") else list(vec)


def subgroup_closure(table, n, seed_elems, gens):
    """Subgroup generated by a seed subgroup plus extra generators (Dimino).

    ``seed_elems``: element list of an existing subgroup containing the
    identity (use ``[0]`` to start from scratch). ``gens`` must include a
    generating set of the seed subgroup followed by the new generators;
    generators already absorbed are skipped in O(1).

    Returns ``(mask, used)`` where ``used[i]`` is 1 iff ``gens[i]`` caused
    an extension. Work is O(result size) table lookups per extension.
    """
    mask = bytearray(n)
    elems = []
    for e in seed_elems:
        if not mask[e]:
            mask[e] = 1
            elems.append(e)
    used = []
    gens_so_far: list[int] = []
    full = False
    for g in gens:
        if full or mask[g]:
            gens_so_far.append(g)
            used.append(0)
            continue
        gens_so_far.append(g)
        used.append(1)
        prev = list(elems)
        rep_queue = [g]
        for h in prev:
            t = table[h * n + g]
            if not mask[t]:
                mask[t] = 1
                elems.append(t)
        qh = 0
        while qh < len(rep_queue):
            r = rep_queue[qh]
            qh += 1
            for s in gens_so_far:
                t = table[r * n + s]
                if not mask[t]:
                    rep_queue.append(t)
                    for h in prev:
                        u = table[h * n + t]
                        if not mask[u]:
                            mask[u] = 1
                            elems.append(u)
        # the set is a subgroup again; order above n/2 forces the whole group
        if 2 * len(elems) > n and len(elems) < n:
            return bytes([1]) * n, tuple(used) + (0,) * (len(gens) - len(used))
        if len(elems) == n:
            full = True
    return bytes(mask), tuple(used)


def element_orders(table, n):
    """Order of every element, as an int32 array."""
    out = array("i", bytes(4 * n))
    for x in range(n):
        k = 1
        cur = x
        while cur != 0:
            cur = table[cur * n + x]
            k += 1
        out[x] = k
    return out


def center_mask(table, n) -> bytes:
    """Mask of elements commuting with everything."""
    mask = bytearray(n)
    for z in range(n):
        zn = z * n
        ok = True
        for x in range(n):
            if table[zn + x] != table[x * n + z]:
                ok = False
                break
        mask[z] = 1 if ok else 0
    return bytes(mask)


def conjugate_mask(table, inv, n, mask, g) -> bytes:
    """Mask of { g h g^-1 : h in mask }."""
    out = bytearray(n)
    gn = g * n
    gi = inv[g]
    for h in range(n):
        if mask[h]:
            out[table[table[gn + h] * n + gi]] = 1
    return bytes(out)


def is_normal_mask(table, inv, n, mask, gens) -> bool:
    """True iff the masked subgroup is invariant under conjugation by ``gens``."""
    for g in gens:
        gn = g * n
        gi = inv[g]
        for h in range(n):
            if mask[h] and not mask[table[table[gn + h] * n + gi]]:
                return False
    return True


def commutator_set(table, inv, n, mask_a, mask_b) -> bytes:
    """Mask of the set of commutators a^-1 b^-1 a b over a in A, b in B."""
    out = bytearray(n)
    elems_a = [a for a in range(n) if mask_a[a]]
    elems_b = [b for b in range(n) if mask_b[b]]
    for a in elems_a:
        an = a * n
        ian = inv[a] * n
        for b in elems_b:
            out[table[table[ian + inv[b]] * n + table[an + b]]] = 1
    return bytes(out)


def coset_partition(table, n, h_elems, n_elems):
    """Left cosets h*N of N inside H.

    ``h_elems`` must be ascending, so each coset's representative is its
    least element and cosets are numbered by ascending representative.
    Returns ``(coset_id, reps)``; ``coset_id[x] = -1`` outside H.
    """
    coset_id = array("i", b"\xff\xff\xff\xff" * n)  # -1
    reps = array("i")
    for h in h_elems:
        if coset_id[h] < 0:
            rid = len(reps)
            reps.append(h)
            hn = h * n
            for x in n_elems:
                coset_id[table[hn + x]] = rid
    return coset_id, reps


def compose_table(table, n, elems):
    """Multiplication table of a subgroup re-indexed to 0..k-1 (flat int32)."""
    k = len(elems)
    pos = [-1] * n
    for i, el in enumerate(elems):
        pos[el] = i
    out = array("i", bytes(4 * k * k))
    for i in range(k):
        row = elems[i] * n
        oi = i * k
        for j in range(k):
            p = pos[table[row + elems[j]]]
            if p < 0:
                raise ValueError("element set is not closed under multiplication")
            out[oi + j] = p
    return out


def quotient_table(table, n, reps, coset_id):
    """Multiplication table of the coset space, via representative products."""
    k = len(reps)
    out = array("i", bytes(4 * k * k))
    for i in range(k):
        row = reps[i] * n
        oi = i * k
        for j in range(k):
            out[oi + j] = coset_id[table[row + reps[j]]]
    return out


def assoc_exhaustive(table, n) -> bool:
    """Check (ab)c == a(bc) for all triples."""
    for a in range(n):
        an = a * n
        for b in range(n):
            ab_n = table[an + b] * n
            bn = b * n
            for c in range(n):
                if table[ab_n + c] != table[an + table[bn + c]]:
                    return False
    return True


def assoc_sampled(table, n, a_idx, b_idx, c_idx) -> bool:
    """Check associativity on the given sample triples."""
    a_idx = a_idx.tolist() if hasattr(a_idx, "tolist") else a_idx
    b_idx = b_idx.tolist() if hasattr(b_idx, "tolist") else b_idx
    c_idx = c_idx.tolist() if hasattr(c_idx, "tolist") else c_idx
    for a, b, c in zip(a_idx, b_idx, c_idx):
        if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]:
            return False
    return True
