# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the hot loops.

Semantics (and returned bytes) must match `grouplab._kernels.pure`
exactly; the pure module is the reference. Tables are flat int32
buffers, subgroup masks are length-n bytes objects.
"""

from array import array as _array

from libc.stdlib cimport free, malloc
from libc.stdint cimport int32_t, uint8_t

BACKEND = "c"


def prepare_table(flat):
    """Keep (or coerce to) a contiguous int32 buffer."""
    return _as_i32(flat)


def prepare_vector(vec):
    return _as_i32(vec)


cdef object _as_i32(object obj):
    cdef const int32_t[::1] view
    try:
        view = obj
        return obj
    except (TypeError, ValueError):
        return _array("i", obj)


def subgroup_closure(table_obj, int n, seed_elems, gens):
    """Dimino closure; see the pure backend for the contract."""
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] seed = _as_i32(seed_elems)
    cdef const int32_t[::1] gen_view = _as_i32(gens)
    cdef Py_ssize_t n_gens = gen_view.shape[0]
    cdef bytearray mask_ba = bytearray(n)
    cdef uint8_t[::1] mask = mask_ba
    cdef int32_t* elems = <int32_t*> malloc(3 * n * sizeof(int32_t))
    if elems == NULL:
        raise MemoryError()
    cdef int32_t* prev = elems + n
    cdef int32_t* rep_queue = elems + 2 * n
    cdef Py_ssize_t count = 0, prev_count, rq_len, qh, i, gi, si
    cdef int32_t g, r, s, t, u
    cdef bint full = False
    used = []
    try:
        for i in range(seed.shape[0]):
            t = seed[i]
            if not mask[t]:
                mask[t] = 1
                elems[count] = t
                count += 1
        for gi in range(n_gens):
            g = gen_view[gi]
            if full or mask[g]:
                used.append(0)
                continue
            used.append(1)
            prev_count = count
            for i in range(prev_count):
                prev[i] = elems[i]
            rep_queue[0] = g
            rq_len = 1
            for i in range(prev_count):
                t = table[prev[i] * n + g]
                if not mask[t]:
                    mask[t] = 1
                    elems[count] = t
                    count += 1
            qh = 0
            while qh < rq_len:
                r = rep_queue[qh]
                qh += 1
                for si in range(gi + 1):
                    s = gen_view[si]
                    t = table[r * n + s]
                    if not mask[t]:
                        rep_queue[rq_len] = t
                        rq_len += 1
                        for i in range(prev_count):
                            u = table[prev[i] * n + t]
                            if not mask[u]:
                                mask[u] = 1
                                elems[count] = u
                                count += 1
            if 2 * count > n and count < n:
                return bytes([1]) * n, tuple(used) + (0,) * (n_gens - len(used))
            if count == n:
                full = True
        return bytes(mask_ba), tuple(used)
    finally:
        free(elems)


def element_orders(table_obj, int n):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    out = _array("i", bytes(4 * n))
    cdef int32_t[::1] view = out
    cdef int32_t x, cur
    cdef int k
    for x in range(n):
        k = 1
        cur = x
        while cur != 0:
            cur = table[cur * n + x]
            k += 1
        view[x] = k
    return out


def center_mask(table_obj, int n):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef bytearray mask_ba = bytearray(n)
    cdef uint8_t[::1] mask = mask_ba
    cdef int32_t z, x
    cdef bint ok
    for z in range(n):
        ok = True
        for x in range(n):
            if table[z * n + x] != table[x * n + z]:
                ok = False
                break
        mask[z] = 1 if ok else 0
    return bytes(mask_ba)


def conjugate_mask(table_obj, inv_obj, int n, const uint8_t[::1] mask, int g):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] inv = _as_i32(inv_obj)
    cdef bytearray out_ba = bytearray(n)
    cdef uint8_t[::1] out = out_ba
    cdef int32_t h, gi = inv[g]
    cdef Py_ssize_t gn = g * n
    for h in range(n):
        if mask[h]:
            out[table[table[gn + h] * n + gi]] = 1
    return bytes(out_ba)


def is_normal_mask(table_obj, inv_obj, int n, const uint8_t[::1] mask, gens):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] inv = _as_i32(inv_obj)
    cdef const int32_t[::1] gen_view = _as_i32(gens)
    cdef Py_ssize_t gi, gn
    cdef int32_t g, ginv, h
    for gi in range(gen_view.shape[0]):
        g = gen_view[gi]
        gn = g * n
        ginv = inv[g]
        for h in range(n):
            if mask[h] and not mask[table[table[gn + h] * n + ginv]]:
                return False
    return True


def commutator_set(table_obj, inv_obj, int n, const uint8_t[::1] mask_a,
                   const uint8_t[::1] mask_b):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] inv = _as_i32(inv_obj)
    cdef bytearray out_ba = bytearray(n)
    cdef uint8_t[::1] out = out_ba
    cdef int32_t* elems_b = <int32_t*> malloc(n * sizeof(int32_t))
    if elems_b == NULL:
        raise MemoryError()
    cdef Py_ssize_t count_b = 0, j, an, ian
    cdef int32_t a, b
    try:
        for b in range(n):
            if mask_b[b]:
                elems_b[count_b] = b
                count_b += 1
        for a in range(n):
            if not mask_a[a]:
                continue
            an = a * n
            ian = inv[a] * n
            for j in range(count_b):
                b = elems_b[j]
                out[table[table[ian + inv[b]] * n + table[an + b]]] = 1
        return bytes(out_ba)
    finally:
        free(elems_b)


def coset_partition(table_obj, int n, h_elems, n_elems):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] h_view = _as_i32(h_elems)
    cdef const int32_t[::1] n_view = _as_i32(n_elems)
    coset_id = _array("i", b"\xff\xff\xff\xff" * n)
    reps = _array("i")
    cdef int32_t[::1] cid = coset_id
    cdef Py_ssize_t i, j, hn
    cdef int32_t h, rid = 0
    for i in range(h_view.shape[0]):
        h = h_view[i]
        if cid[h] < 0:
            reps.append(h)
            hn = h * n
            for j in range(n_view.shape[0]):
                cid[table[hn + n_view[j]]] = rid
            rid += 1
    return coset_id, reps


def compose_table(table_obj, int n, elems):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] el = _as_i32(elems)
    cdef Py_ssize_t k = el.shape[0]
    cdef int32_t* pos = <int32_t*> malloc(n * sizeof(int32_t))
    if pos == NULL:
        raise MemoryError()
    out = _array("i", bytes(4 * k * k))
    cdef int32_t[::1] view = out
    cdef Py_ssize_t i, j, row, oi
    cdef int32_t p
    try:
        for i in range(n):
            pos[i] = -1
        for i in range(k):
            pos[el[i]] = <int32_t> i
        for i in range(k):
            row = el[i] * n
            oi = i * k
            for j in range(k):
                p = pos[table[row + el[j]]]
                if p < 0:
                    raise ValueError("element set is not closed under multiplication")
                view[oi + j] = p
        return out
    finally:
        free(pos)


def quotient_table(table_obj, int n, reps, coset_id):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] rep_view = _as_i32(reps)
    cdef const int32_t[::1] cid = _as_i32(coset_id)
    cdef Py_ssize_t k = rep_view.shape[0]
    out = _array("i", bytes(4 * k * k))
    cdef int32_t[::1] view = out
    cdef Py_ssize_t i, j, row, oi
    for i in range(k):
        row = rep_view[i] * n
        oi = i * k
        for j in range(k):
            view[oi + j] = cid[table[row + rep_view[j]]]
    return out


def assoc_exhaustive(table_obj, int n):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef Py_ssize_t an, bn, abn
    cdef int32_t a, b, c
    for a in range(n):
        an = a * n
        for b in range(n):
            abn = table[an + b] * n
            bn = b * n
            for c in range(n):
                if table[abn + c] != table[an + table[bn + c]]:
                    return False
    return True


def assoc_sampled(table_obj, int n, a_idx, b_idx, c_idx):
    cdef const int32_t[::1] table = _as_i32(table_obj)
    cdef const int32_t[::1] av = _as_i32(a_idx)
    cdef const int32_t[::1] bv = _as_i32(b_idx)
    cdef const int32_t[::1] cv = _as_i32(c_idx)
    cdef Py_ssize_t i
    cdef int32_t a, b, c
    for i in range(av.shape[0]):
        a = av[i]
        b = bv[i]
        c = cv[i]
        if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]:
            return False
    return True
