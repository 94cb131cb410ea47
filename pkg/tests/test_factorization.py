import random

import pytest

from arithmetic import factor, is_irreducible, is_squarefree, monic_irreducibles, read_poly
from arithmetic.arithmetic_helper import ArithmeticHelper
from utils.errors import BudgetExceeded, ConstantPolynomial, DivideByZeroPoly


def test_irreducible_quadratics_over_f3(ring3):
    primes = monic_irreducibles(ring3, 2)
    assert primes == [read_poly(ring3, "T^2 + 1"), read_poly(ring3, "T^2 + T + 2"),
                      read_poly(ring3, "T^2 + 2*T + 2")]


@pytest.mark.parametrize("fixture, d", [("ring3", 3), ("ring4", 2), ("ring5", 2), ("ring9", 2)])
def test_prime_counts_match_necklaces(request, fixture, d):
    ring = request.getfixturevalue(fixture)
    assert len(monic_irreducibles(ring, d)) == ArithmeticHelper.necklace_count(ring.field.size, d)


def test_necklace_counts_over_f3():
    assert [ArithmeticHelper.necklace_count(3, d) for d in range(1, 6)] == [3, 3, 8, 18, 48]


def test_irreducibles_respect_candidate_budget(ring3):
    with pytest.raises(BudgetExceeded):
        monic_irreducibles(ring3, 5, budget=100)
    assert len(monic_irreducibles(ring3, 2, budget=9)) == 3


def test_is_irreducible(ring3):
    assert is_irreducible(read_poly(ring3, "T^2 + 1"))
    assert not is_irreducible(read_poly(ring3, "T^2 + 2"))
    assert is_irreducible(read_poly(ring3, "T^3 + 2*T + 2"))
    with pytest.raises(ConstantPolynomial):
        is_irreducible(ring3.one)


def test_is_squarefree(ring3):
    T = ring3.T
    assert is_squarefree(T ** 2 + 1)
    assert not is_squarefree(T ** 3 + 1)
    assert not is_squarefree(T * (T + 1) ** 2)
    with pytest.raises(DivideByZeroPoly):
        is_squarefree(ring3.zero)


def test_factor_t4_t_1_over_f4(ring4):
    f = read_poly(ring4, "T^4 + T + 1")
    factorization = factor(f, seed=0)
    assert factorization.unit == 1
    assert factorization.primes() == [read_poly(ring4, "T^2 + T + [0,1]"),
                                      read_poly(ring4, "T^2 + T + [1,1]")]
    assert factorization.expand() == f


def test_factor_with_pth_powers(ring3):
    T = ring3.T
    f = T * (T + 1) ** 3
    factorization = factor(f, seed=0)
    assert factorization.to_list() == [(T, 1), (T + 1, 3)]


def test_factor_keeps_the_unit(ring3):
    f = read_poly(ring3, "1 + T - T^3")
    factorization = factor(f, seed=0)
    assert factorization.unit == 2
    assert factorization.primes() == [read_poly(ring3, "T^3 + 2*T + 2")]


@pytest.mark.parametrize("fixture", ["ring3", "ring4", "ring9"])
def test_random_factorizations_multiply_back(request, fixture):
    ring = request.getfixturevalue(fixture)
    rng = random.Random(5)
    for _ in range(8):
        f = ring.random_poly(rng, rng.randrange(1, 10))
        factorization = factor(f, seed=rng.randrange(100))
        assert factorization.expand() == f
        assert all(P.is_monic() and is_irreducible(P) for P in factorization.primes())


def test_factorization_is_seed_independent(ring5):
    f = ring5.monomial(5) - ring5.T
    assert factor(f, seed=1).to_list() == factor(f, seed=99).to_list()


def test_factor_zero(ring3):
    with pytest.raises(DivideByZeroPoly):
        factor(ring3.zero)
