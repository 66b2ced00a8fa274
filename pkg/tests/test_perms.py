from __future__ import annotations

import pytest

import grouplab as gl
from grouplab.perms import Permutation, close_generators


def test_permutation_rejects_non_bijections():
    with pytest.raises(gl.InvalidSpec):
        Permutation((0, 0, 1))
    with pytest.raises(gl.InvalidSpec):
        Permutation(())


def test_compose_and_inverse_roundtrip():
    p = Permutation.from_cycles(5, (0, 1, 2), (3, 4))
    q = Permutation.from_cycles(5, (1, 4))
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()
    # composition applies the right factor first
    assert (p * q).images == tuple(p.images[q.images[i]] for i in range(5))


def test_cycle_decomposition_and_order():
    p = Permutation.from_cycles(6, (0, 1, 2), (3, 4))
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.order() == 6
    assert Permutation.identity(4).order() == 1
    assert p.cycle_string() == "(0 1 2)(3 4)"
    assert Permutation.identity(3).cycle_string() == "()"


def test_close_generators_identity_only():
    elems = close_generators([Permutation.identity(3)], cap=10)
    assert len(elems) == 1
    assert elems[0].is_identity()


def test_close_generators_s3():
    gens = [Permutation.from_cycles(3, (0, 1, 2)), Permutation.from_cycles(3, (0, 1))]
    elems = close_generators(gens, cap=10)
    assert len(elems) == 6
    assert len({p.images for p in elems}) == 6
    assert elems[0].is_identity()


def test_close_generators_cap_exceeded():
    five_cycle = Permutation.from_cycles(5, (0, 1, 2, 3, 4))
    with pytest.raises(gl.CapExceeded):
        close_generators([five_cycle], cap=3)


def test_close_generators_deterministic_bfs_order():
    gens = [Permutation.from_cycles(3, (0, 1, 2)), Permutation.from_cycles(3, (0, 1))]
    first = [p.images for p in close_generators(gens, cap=10)]
    second = [p.images for p in close_generators(gens, cap=10)]
    assert first == second
    # BFS from the identity: element 1 is identity * first generator
    assert first[1] == gens[0].images


def test_close_generators_mixed_degrees_rejected():
    with pytest.raises(gl.InvalidSpec):
        close_generators(
            [Permutation.identity(3), Permutation.identity(4)], cap=10
        )
