from __future__ import annotations

import pytest

import grouplab as gl
from oracles import subgroups_by_subsets

ORACLE_SPECS = ["C(8)", "C(12)", "D(8)", "D(12)", "S(3)", "S(4)", "A(4)", "C(15)", "D(20)"]


def test_cyclic_prime_has_two_subgroups(lattices):
    assert len(lattices("C(7)")) == 2


def test_s3_lattice_detailed(lattices):
    lat = lattices("S(3)")
    orders = sorted(s.order for s in lat)
    assert orders == [1, 2, 2, 2, 3, 6]
    assert sum(1 for s in lat if s.normal) == 3  # trivial, A3, S3


@pytest.mark.parametrize("text", ORACLE_SPECS)
def test_matches_subset_oracle(built, lattices, text):
    group = built(text)
    expected = subgroups_by_subsets(group)
    lat = lattices(text)
    found = {frozenset(int(e) for e in s.elements()) for s in lat}
    assert found == expected


@pytest.mark.parametrize("text", ORACLE_SPECS + ["E(3^3)", "G375"])
def test_lagrange_and_membership(built, lattices, text):
    group = built(text)
    for sub in lattices(text):
        assert group.order % sub.order == 0
        assert 0 in sub


def test_lattice_contains_trivial_and_whole(lattices):
    lat = lattices("S(4)")
    assert lat.trivial_subgroup().order == 1
    assert lat.whole_group().order == 24


@pytest.mark.parametrize("text", ["S(3)", "S(4)", "D(12)", "E(3^3)", "C(12)"])
def test_closure_properties(lattices, text):
    lat = lattices(text)
    assert lat.is_conjugation_closed()
    assert lat.is_intersection_closed()


def test_group375_closure_properties(lattices):
    lat = lattices("G375")
    assert lat.is_conjugation_closed()
    assert lat.is_intersection_closed()


def test_lattice_cap(built):
    with pytest.raises(gl.LatticeCapExceeded):
        gl.all_subgroups(built("S(4)"), cap=10)


def test_lattice_deterministic(built):
    group = built("S(4)")
    first = gl.all_subgroups(group)
    second = gl.all_subgroups(group)
    assert [s.mask for s in first] == [s.mask for s in second]
    assert [s.order for s in first] == [s.order for s in second]


def test_is_normal_examples(built, lattices):
    s3 = built("S(3)")
    lat = lattices("S(3)")
    trivial = lat.trivial_subgroup()
    assert gl.is_normal(s3, trivial)
    order3 = next(s for s in lat if s.order == 3)
    assert gl.is_normal(s3, order3)
    for s in lat:
        if s.order == 2:
            assert not gl.is_normal(s3, s)


def test_maximal_subgroups_examples(built, lattices):
    cyclic7 = gl.maximal_subgroups(built("C(7)"), lattices("C(7)"))
    assert [s.order for s in cyclic7] == [1]
    s3_max = gl.maximal_subgroups(built("S(3)"), lattices("S(3)"))
    assert sorted(s.order for s in s3_max) == [2, 2, 2, 3]
    c12_max = gl.maximal_subgroups(built("C(12)"), lattices("C(12)"))
    assert sorted(s.order for s in c12_max) == [4, 6]


def test_frattini_examples(built, lattices):
    assert gl.frattini(built("S(3)"), lattices("S(3)")).order == 1
    assert gl.frattini(built("C(4)"), lattices("C(4)")).order == 2
    e125 = built("E(5^3)")
    frat = gl.frattini(e125, lattices("E(5^3)"))
    assert frat.order == 5
    assert frat.mask == gl.center(e125).mask


def test_frattini_inside_every_maximal(built, lattices):
    for text in ["S(4)", "C(12)", "D(12)", "E(3^3)"]:
        group = built(text)
        lat = lattices(text)
        frat = gl.frattini(group, lat)
        assert gl.is_normal(group, frat)
        for m in gl.maximal_subgroups(group, lat):
            assert m.contains_subgroup(frat)


def test_sylow_examples(built, lattices):
    s3 = built("S(3)")
    lat = lattices("S(3)")
    assert [s.order for s in gl.sylow_subgroups(s3, lat, 3)] == [3]
    assert [s.order for s in gl.sylow_subgroups(s3, lat, 2)] == [2, 2, 2]
    # p not dividing |G|: the trivial subgroup is the unique Sylow p-subgroup
    assert [s.order for s in gl.sylow_subgroups(s3, lat, 5)] == [1]


def test_sylow_counts_and_conjugacy(built, lattices):
    from grouplab.lattice import conjugacy_orbit_masks

    for text in ["S(3)", "S(4)", "A(4)", "D(12)", "G375"]:
        group = built(text)
        lat = lattices(text)
        seen_primes = set()
        order = group.order
        d = 2
        while d <= order:
            if order % d == 0:
                seen_primes.add(d)
                while order % d == 0:
                    order //= d
            d += 1
        for p in seen_primes:
            sylows = gl.sylow_subgroups(group, lat, p)
            assert len(sylows) % p == 1
            orbit = set(conjugacy_orbit_masks(group, sylows[0]))
            assert orbit == {s.mask for s in sylows}


def test_group375_sylow5_unique(built, lattices):
    lat = lattices("G375")
    sylows = gl.sylow_subgroups(built("G375"), lat, 5)
    assert len(sylows) == 1
    assert sylows[0].order == 125
    assert gl.is_normal(built("G375"), sylows[0])


def test_inclusions_relation(lattices):
    lat = lattices("S(3)")
    pairs = lat.inclusions()
    subs = lat.subgroups
    for i, j in pairs:
        assert subs[j].contains_subgroup(subs[i])
        assert subs[i].order < subs[j].order
    trivial_idx = 0
    assert sum(1 for i, _ in pairs if i == trivial_idx) == len(subs) - 1


def test_verify_schmidt_lattice_examples(built, lattices):
    s3 = built("S(3)")
    lat3 = lattices("S(3)")
    p1 = next(s for s in lat3 if s.order == 3)
    q1 = next(s for s in lat3 if s.order == 2)
    assert gl.verify_schmidt_lattice(s3, lat3, p1, q1)

    a4 = built("A(4)")
    lat4 = lattices("A(4)")
    klein = next(s for s in lat4 if s.order == 4)
    c3 = next(s for s in lat4 if s.order == 3)
    assert gl.verify_schmidt_lattice(a4, lat4, klein, c3)

    c6 = built("C(6)")
    lat6 = lattices("C(6)")
    p1 = next(s for s in lat6 if s.order == 3)
    q1 = next(s for s in lat6 if s.order == 2)
    assert not gl.verify_schmidt_lattice(c6, lat6, p1, q1)


def test_subgroup_generators_generate(built, lattices):
    group = built("S(4)")
    table, _ = group.kernel_handles()
    from array import array

    from grouplab._kernels import K

    for sub in lattices("S(4)"):
        gens = sub.generators()
        if sub.order == 1:
            assert gens == ()
            continue
        mask, _ = K.subgroup_closure(
            table, group.order, array("i", [0]), array("i", gens)
        )
        assert mask == sub.mask
