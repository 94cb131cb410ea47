import pytest

from arithmetic import LaurentSeries, RationalFunction, build_field
from utils.errors import DivideByZeroPoly, FieldMismatch


@pytest.fixture(scope="module")
def f3():
    return build_field(3, 1)


def test_reciprocal_of_l1(ring3, f3):
    T = ring3.T
    series = LaurentSeries.reciprocal_poly(T - T ** 3, 12)
    assert series.valuation == 3
    assert [series.coefficient(j) for j in range(12)] == [0, 0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2]
    assert series.abs_prec == 12


def test_from_poly_and_product(ring3):
    T = ring3.T
    f = T ** 2 + 1
    product = LaurentSeries.from_poly(f, 10) * LaurentSeries.reciprocal_poly(f, 12)
    assert product.agrees_with(LaurentSeries.constant(ring3.field, 1, 8))


def test_from_rational(ring3):
    T = ring3.T
    r = RationalFunction(T + 1, T ** 2)
    series = LaurentSeries.from_rational(r, 6)
    assert [series.coefficient(j) for j in range(6)] == [0, 1, 1, 0, 0, 0]


def test_normalization_of_zero(f3):
    zero = LaurentSeries(f3, 0, [0, 0, 0], 3)
    assert zero.is_zero()
    assert zero.valuation == 3
    assert zero == LaurentSeries.zero(f3, 3)


def test_add_takes_common_precision(f3):
    a = LaurentSeries.constant(f3, 1, 5)
    b = LaurentSeries.monomial(f3, 2, 8)
    total = a + b
    assert total.abs_prec == 5
    assert total.coefficient(2) == 1


def test_inverse_precision(f3):
    x = LaurentSeries(f3, -1, [1, 1], 6)
    inv = x.inverse()
    assert inv.valuation == 1
    assert inv.abs_prec == 8
    assert (x * inv).agrees_with(LaurentSeries.constant(f3, 1, 7))


def test_inverse_of_zero(f3):
    with pytest.raises(DivideByZeroPoly):
        LaurentSeries.zero(f3, 4).inverse()


def test_frobenius_power(ring3):
    T = ring3.T
    x = LaurentSeries.reciprocal_poly(T + 1, 6)
    assert x.frobenius_power(1).agrees_with(x * x * x)


def test_shift(f3):
    x = LaurentSeries.constant(f3, 2, 5).shift(1)
    assert x.valuation == -1
    assert x.abs_prec == 4


def test_lift_and_descend(ring3):
    f9 = build_field(3, 2)
    x = LaurentSeries.reciprocal_poly(ring3.T + 2, 7)
    lifted = x.lift(f9)
    assert lifted.field == f9
    assert lifted.coefficients_in(ring3.field)
    assert lifted.descend(ring3.field) == x


def test_field_mismatch(f3):
    with pytest.raises(FieldMismatch):
        LaurentSeries.constant(f3, 1, 3) + LaurentSeries.constant(build_field(5, 1), 1, 3)


def test_to_json_and_repr(f3):
    x = LaurentSeries(f3, 0, [1, 0, 2], 3)
    assert x.to_json() == {"leadExp": 0, "coeffs": [1, 0, 2], "absPrec": 3}
    assert repr(x) == "1 + 2*T^-2 + O(T^-3)"
