import random

import pytest

from arithmetic import PolyRing, build_field
from utils.errors import DivideByZeroPoly, FieldMismatch, InexactDivision


def test_strip_and_degree(ring3):
    assert ring3.poly([1, 2, 0, 0]).degree == 1
    assert ring3.zero.degree == -1
    assert ring3.zero.is_zero()
    assert ring3.T.is_monic()


def test_integer_coercion(ring3):
    T = ring3.T
    assert T + 3 == T
    assert (T + 1) * 2 == ring3.from_ints([2, 2])
    assert 1 - T == ring3.from_ints([1, 2])


def test_divmod_reconstructs(ring5):
    rng = random.Random(3)
    for _ in range(20):
        f = ring5.random_poly(rng, rng.randrange(0, 8))
        g = ring5.random_poly(rng, rng.randrange(1, 5))
        quot, rem = divmod(f, g)
        assert quot * g + rem == f
        assert rem.degree < g.degree


def test_exact_division(ring3):
    T = ring3.T
    assert (T ** 3 - T).exact_div(T + 1) == T ** 2 - T
    with pytest.raises(InexactDivision):
        (T ** 2 + 1).exact_div(T)


def test_division_by_zero(ring3):
    with pytest.raises(DivideByZeroPoly):
        divmod(ring3.T, ring3.zero)


def test_gcd_is_monic(ring3):
    T = ring3.T
    f = (T + 1) * (T ** 2 + 1) * 2
    g = (T + 1) * T
    assert f.gcd(g) == T + 1


def test_invmod_and_powmod(ring3):
    T = ring3.T
    P = T ** 2 + 1
    inv = (T + 2).invmod(P)
    assert ((T + 2) * inv) % P == 1
    assert T.powmod(4, P) == 1
    assert T.powmod(-1, P) == T.invmod(P)
    with pytest.raises(ZeroDivisionError):
        (T ** 2 + 1).invmod(T ** 4 - 1)


def test_frobenius_power(ring4):
    T = ring4.T
    omega = ring4.constant(2)
    f = T + omega
    assert f.frobenius_power(1) == f * f
    assert f.frobenius_power(2) == f ** 4


def test_valuation(ring3):
    T = ring3.T
    assert (T ** 3 * (T + 1)).valuation(T) == 3
    assert (T + 1).valuation(T) == 0
    assert ring3.zero.valuation(T, cap=5) == 5


def test_field_mismatch(ring3, ring5):
    with pytest.raises(FieldMismatch):
        ring3.T + ring5.T


def test_monic_polys_enumeration(ring3):
    cubics = list(ring3.monic_polys(3))
    assert len(cubics) == 27
    assert all(f.is_monic() and f.degree == 3 for f in cubics)
    assert len(set(cubics)) == 27


def test_polys_below_includes_zero(ring3):
    below = list(ring3.polys_below(2))
    assert len(below) == 9
    assert below[0].is_zero()


def test_large_prime_field_product_matches_schoolbook():
    ring = PolyRing(build_field(7, 1))
    rng = random.Random(11)
    f = ring.random_poly(rng, 40)
    g = ring.random_poly(rng, 45)
    expected = ring.zero
    for k, c in enumerate(g.coeffs):
        expected = expected + f * ring.monomial(k, c)
    assert f * g == expected


def test_evaluation(ring4):
    T = ring4.T
    f = T ** 2 + T + ring4.constant(2)
    omega = ring4.field.element(2)
    assert not f(omega).is_zero()
    assert ring4.evaluate((ring4.T * ring4.T - ring4.T).coeffs, 1) == 0
