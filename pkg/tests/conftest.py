import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from krull import GF, Ideal, QQ, RingSpec, parse_poly, parse_poly_list, parse_ring


@pytest.fixture
def qxy():
    return parse_ring("Q[x,y]")


@pytest.fixture
def qxyz():
    return parse_ring("Q[x,y,z]")


@pytest.fixture
def ex1_ring():
    return parse_ring("F32003[x1,x2,x3,y]")


@pytest.fixture
def ex1_ideal(ex1_ring):
    return Ideal(ex1_ring, parse_poly_list("x1*y, x2*y, x3*y", ex1_ring))


@pytest.fixture
def ex2_ring():
    return parse_ring("F32003[x,y,z]")


@pytest.fixture
def ex2_ideal(ex2_ring):
    return Ideal(ex2_ring, parse_poly_list("x^3, x^2*y, x^2*z, z^2", ex2_ring))


def mk_ideal(ring, text):
    return Ideal(ring, parse_poly_list(text, ring))
