import random

import pytest

from arithmetic import FieldTower, LaurentSeries
from carlitz import InfinityAnalytics
from utils.errors import BudgetExceeded, OutsideConvergenceDomain


def test_log_of_one_coefficients(ring3):
    infinity = InfinityAnalytics(ring3, precision=12)
    value = infinity.log_C_eval(LaurentSeries.constant(ring3.field, 1, 12))
    expected = [1, 0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2]
    assert [value.coefficient(j) for j in range(12)] == expected


@pytest.mark.parametrize("fixture, prec", [("ring3", 20), ("ring3", 40), ("ring4", 24), ("ring5", 15), ("ring9", 12)])
def test_zeta_at_one_equals_log_of_one(request, fixture, prec):
    ring = request.getfixturevalue(fixture)
    infinity = InfinityAnalytics(ring, precision=prec)
    zeta = infinity.zeta_A1()
    log_one = infinity.log_C_eval(LaurentSeries.constant(ring.field, 1, prec))
    assert zeta.abs_prec == prec
    assert zeta.agrees_with(log_one)


def test_log_domain(ring3):
    infinity = InfinityAnalytics(ring3)
    T = ring3.T
    assert infinity.in_log_domain(LaurentSeries.from_poly(T, 8))
    with pytest.raises(OutsideConvergenceDomain):
        infinity.log_C_eval(LaurentSeries.from_poly(T ** 2, 8))


def test_exp_inverts_log_near_zero(ring3):
    infinity = InfinityAnalytics(ring3)
    x = LaurentSeries.monomial(ring3.field, 1, 15)
    assert infinity.e_C_eval(infinity.log_C_eval(x)).agrees_with(x)


@pytest.mark.parametrize("fixture", ["ring3", "ring4"])
def test_exp_and_log_invert_each_other_on_random_input(request, fixture):
    ring = request.getfixturevalue(fixture)
    field = ring.field
    infinity = InfinityAnalytics(ring, precision=30)
    rng = random.Random(2024)
    for _ in range(20):
        v = rng.randint(1, 5)
        coeffs = [rng.randrange(1, field.size)] + [rng.randrange(field.size) for _ in range(v + 1, 30)]
        x = LaurentSeries(field, v, coeffs, 30)
        assert x.valuation == v
        assert infinity.e_C_eval(infinity.log_C_eval(x)).agrees_with(x)
        assert infinity.log_C_eval(infinity.e_C_eval(x)).agrees_with(x)


@pytest.mark.parametrize("fixture", ["ring3", "ring4"])
def test_exponential_functional_equation(request, fixture):
    ring = request.getfixturevalue(fixture)
    infinity = InfinityAnalytics(ring)
    assert infinity.functional_equation_check(LaurentSeries.constant(ring.field, 1, 14))
    assert infinity.functional_equation_check(LaurentSeries.monomial(ring.field, 2, 14))


class TestNormalBasis:

    def test_degree_one_is_one(self, ring3):
        alpha = InfinityAnalytics(ring3).normal_basis_element(1)
        assert alpha.code == 1

    @pytest.mark.parametrize("fixture, n", [("ring3", 2), ("ring3", 3), ("ring4", 2)])
    def test_certificate(self, request, fixture, n):
        ring = request.getfixturevalue(fixture)
        infinity = InfinityAnalytics(ring)
        alpha = infinity.normal_basis_element(n)
        tower = FieldTower(ring.field, n)
        assert alpha.descriptor == tower.ext
        assert infinity.normal_basis_certificate(tower, alpha.code)
        assert not infinity.normal_basis_certificate(tower, tower.lift(1))

    def test_log_alpha_is_a_unit(self, ring3):
        assert InfinityAnalytics(ring3, precision=10).log_alpha_unit_check(2)


class TestZetaAn:

    def test_budget(self, ring3):
        infinity = InfinityAnalytics(ring3, term_budget=100)
        with pytest.raises(BudgetExceeded):
            infinity.zeta_An(2, 12, degree_cap=3)

    def test_n_one_matches_zeta_a1(self, ring3):
        infinity = InfinityAnalytics(ring3)
        result = infinity.zeta_An(1, 14, degree_cap=3)
        assert result.series.agrees_with(infinity.zeta_A1(14))
        assert result.layer_valuations[0] == 0

    def test_layer_valuations_respect_bound(self, ring3):
        infinity = InfinityAnalytics(ring3)
        result = infinity.zeta_An(2, 12, degree_cap=2)
        for j, valuation in result.layer_valuations.items():
            assert valuation >= min(infinity.layer_valuation_bound(2, j), 12)
        assert result.to_json()["lastContributingDegree"] == 1

    @pytest.mark.parametrize("fixture, n", [("ring3", 2), ("ring3", 3), ("ring4", 2)])
    def test_zeta_an_equals_regulator(self, request, fixture, n):
        ring = request.getfixturevalue(fixture)
        infinity = InfinityAnalytics(ring)
        zeta = infinity.zeta_An(n, 20, degree_cap=2)
        assert zeta.series.agrees_with(infinity.regulator_An(n, 20).series)

    def test_quadratic_regulator_is_tame(self, ring3):
        regulator = InfinityAnalytics(ring3).regulator_An(2, 16)
        assert regulator.m == 2 and regulator.ell == 0


class TestRegulator:

    def test_n_one_is_log_of_one(self, ring3):
        infinity = InfinityAnalytics(ring3)
        regulator = infinity.regulator_An(1, 12)
        assert regulator.series.agrees_with(infinity.log_C_eval(LaurentSeries.constant(ring3.field, 1, 12)))

    def test_wild_part(self, ring3):
        regulator = InfinityAnalytics(ring3).regulator_An(3, 9)
        assert (regulator.m, regulator.ell) == (1, 1)
        assert regulator.series.coefficient(0) == 1
