"""
Ortak test fikstürleri
"""

from functools import lru_cache

import pytest

from finite_ring import FiniteRing, build_ring
from ideal_lattice import IdealLattice, enumerate_ideals
from ring_dsl import parse_spec


@lru_cache(maxsize=None)
def _ring(text: str) -> FiniteRing:
    return build_ring(parse_spec(text))


@lru_cache(maxsize=None)
def _lattice(text: str) -> IdealLattice:
    return enumerate_ideals(_ring(text))


@pytest.fixture
def ring_of():
    """DSL metninden (önbellekli) halka"""
    return _ring


@pytest.fixture
def lattice_of():
    """DSL metninden (önbellekli) ideal kafesi"""
    return _lattice


@pytest.fixture
def f2xy():
    """GF(2)[x,y]/(x², xy, y²): GLR olmayan 8 elemanlı yerel halka"""
    return _ring("@counterexample_f2xy.json")
