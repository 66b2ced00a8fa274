from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

import grouplab as gl


@pytest.fixture(scope="session")
def built():
    """Session-wide cache of built groups, keyed by spec text."""
    cache: dict[str, gl.FiniteGroup] = {}

    def get(text: str, cap: int = 6000) -> gl.FiniteGroup:
        if text not in cache:
            cache[text] = gl.build_group(gl.parse_spec(text), cap=cap)
        return cache[text]

    return get


@pytest.fixture(scope="session")
def lattices(built):
    """Session-wide cache of subgroup lattices, keyed by spec text."""
    cache: dict[str, gl.SubgroupLattice] = {}

    def get(text: str) -> gl.SubgroupLattice:
        if text not in cache:
            cache[text] = gl.all_subgroups(built(text))
        return cache[text]

    return get
