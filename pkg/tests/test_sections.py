from __future__ import annotations

import pytest

import grouplab as gl


def test_quotient_by_trivial_preserves_profile(built, lattices):
    group = built("S(4)")
    trivial = lattices("S(4)").trivial_subgroup()
    quot = gl.quotient(group, trivial)
    assert gl.profile(quot).histogram == gl.profile(group).histogram


def test_quotient_by_whole_group_is_trivial(built, lattices):
    group = built("S(4)")
    quot = gl.quotient(group, lattices("S(4)").whole_group())
    assert quot.order == 1


def test_quotient_not_normal_raises(built, lattices):
    s3 = built("S(3)")
    order2 = next(s for s in lattices("S(3)") if s.order == 2)
    with pytest.raises(gl.NotNormal):
        gl.quotient(s3, order2)


def test_quotient_sizes_multiply(built, lattices):
    group = built("S(4)")
    for sub in lattices("S(4)"):
        if sub.normal:
            quot = gl.quotient(group, sub)
            assert quot.order * sub.order == group.order


def test_quotient_s4_by_klein_is_s3_like(built, lattices):
    group = built("S(4)")
    klein = next(
        s
        for s in lattices("S(4)")
        if s.order == 4 and s.normal
    )
    quot = gl.quotient(group, klein)
    assert gl.profile(quot).histogram == gl.profile(built("S(3)")).histogram


def test_coset_map_is_homomorphism(built, lattices):
    group = built("A(4)")
    for sub in lattices("A(4)"):
        if not sub.normal:
            continue
        from grouplab.sections import quotient_with_map

        quot, coset_id = quotient_with_map(group, sub)
        for a in range(group.order):
            for b in range(group.order):
                assert coset_id[group.mul(a, b)] == quot.mul(coset_id[a], coset_id[b])
        assert sorted(set(coset_id)) == list(range(quot.order))  # surjective


def test_sections_trivial_group(built, lattices):
    secs = list(gl.sections(built("C(1)"), lattices("C(1)")))
    assert len(secs) == 1
    assert secs[0].quotient.order == 1


def test_sections_cyclic_prime_count(built, lattices):
    secs = list(gl.sections(built("C(5)"), lattices("C(5)")))
    assert len(secs) == 3  # (1,1), (G,1), (G,G)
    assert [(s.h.order, s.n.order) for s in secs] == [(1, 1), (5, 1), (5, 5)]


def test_sections_include_group_itself_with_phi(built, lattices):
    group = built("S(3)")
    secs = list(gl.sections(group, lattices("S(3)")))
    full = [s for s in secs if s.h.order == 6 and s.n.order == 1]
    assert len(full) == 1
    assert gl.phi(full[0].quotient) == 0
    assert gl.profile(full[0].quotient).histogram == gl.profile(group).histogram


def test_sections_deterministic_and_consistent(built, lattices):
    group = built("S(4)")
    lat = lattices("S(4)")
    first = [(s.identifier, s.quotient.order) for s in gl.sections(group, lat)]
    second = [(s.identifier, s.quotient.order) for s in gl.sections(group, lat)]
    assert first == second
    for section in gl.sections(group, lat):
        assert section.h.order == section.n.order * section.quotient.order
        assert gl.exponent(built("S(4)")) % 1 == 0  # sanity
        # quotient exponent divides the exponent of H materialized
        h_group, _ = gl.as_group(section.h)
        assert gl.exponent(h_group) % gl.exponent(section.quotient) == 0


def test_section_identifiers_reference_lattice(built, lattices):
    lat = lattices("A(4)")
    for section in gl.sections(built("A(4)"), lat):
        assert section.identifier == f"H#{section.h_index}/N#{section.n_index}"
        assert lat.subgroups[section.h_index] is section.h
        assert lat.subgroups[section.n_index] is section.n


def test_as_group_localizes_generators(built, lattices):
    group = built("S(4)")
    sub = next(s for s in lattices("S(4)") if s.order == 8)
    sub_group, elems = gl.as_group(sub)
    assert sub_group.order == 8
    # local products match parent products through the element map
    for i in range(8):
        for j in range(8):
            assert elems[sub_group.mul(i, j)] == group.mul(elems[i], elems[j])


def test_coset_representatives_are_least_indices(built, lattices):
    group = built("S(4)")
    from grouplab.sections import quotient_with_map

    normal = next(s for s in lattices("S(4)") if s.order == 12)
    quot, coset_id = quotient_with_map(group, normal)
    for coset in range(quot.order):
        members = [x for x in range(group.order) if coset_id[x] == coset]
        assert coset_id.index(coset) == min(members)
