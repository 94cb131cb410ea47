import pytest

from arithmetic import FieldTower, PolyRing, build_field, factor, monic_irreducibles, norm_to_base, read_poly
from arithmetic.norms import lift_poly
from utils.errors import FieldMismatch, NotMonic


@pytest.fixture(scope="module")
def tower():
    return FieldTower(build_field(3, 1), 2)


@pytest.fixture(scope="module")
def ext_ring(tower):
    return PolyRing(tower.ext)


def test_norm_of_linear_factor(tower, ext_ring, ring3):
    f = read_poly(ext_ring, "T + [0,1]")
    assert norm_to_base(f, tower, ring3) == read_poly(ring3, "T^2 + 1")


def test_norm_of_base_polynomial_is_its_power(tower, ext_ring, ring3):
    g = read_poly(ring3, "T^2 + T + 2")
    lifted = lift_poly(g, tower, ext_ring)
    assert norm_to_base(lifted, tower, ring3) == g ** 2


def test_norm_is_multiplicative(tower, ext_ring, ring3):
    f = read_poly(ext_ring, "T + [1,1]")
    g = read_poly(ext_ring, "T^2 + [0,2]*T + 1")
    assert norm_to_base(f * g, tower, ring3) == norm_to_base(f, tower, ring3) * norm_to_base(g, tower, ring3)


def test_norms_of_degree_one_primes_cover_inert_quadratics(tower, ext_ring, ring3):
    norms = {norm_to_base(f, tower, ring3) for f in ext_ring.monic_polys(1)}
    for P in monic_irreducibles(ring3, 2):
        assert P in norms


def test_norm_rejects_non_monic(tower, ext_ring):
    with pytest.raises(NotMonic):
        norm_to_base(ext_ring.T * 2, tower)


def test_norm_rejects_wrong_field(tower, ring3):
    with pytest.raises(FieldMismatch):
        norm_to_base(ring3.T, tower)


def test_norm_splits_into_conjugates(tower, ext_ring, ring3):
    f = read_poly(ext_ring, "T^2 + [1,1]*T + [0,1]")
    norm = norm_to_base(f, tower, ring3)
    assert norm.degree == 4
    lifted = lift_poly(norm, tower, ext_ring)
    assert f.divides(lifted)
    assert factor(lifted).expand() == lifted
