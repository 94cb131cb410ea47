"""
Shared fixtures: the rings F_q[T] for the field sizes exercised by the suite.
"""

import pytest

from arithmetic import PolyRing, build_field, read_poly


def make_ring(p: int, e: int = 1) -> PolyRing:
    return PolyRing(build_field(p, e))


@pytest.fixture(scope="session")
def ring3() -> PolyRing:
    return make_ring(3)


@pytest.fixture(scope="session")
def ring4() -> PolyRing:
    return make_ring(2, 2)


@pytest.fixture(scope="session")
def ring5() -> PolyRing:
    return make_ring(5)


@pytest.fixture(scope="session")
def ring8() -> PolyRing:
    return make_ring(2, 3)


@pytest.fixture(scope="session")
def ring9() -> PolyRing:
    return make_ring(3, 2)


@pytest.fixture
def poly():
    """Parse a polynomial literal in a given ring."""
    return read_poly
