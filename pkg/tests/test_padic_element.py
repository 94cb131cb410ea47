import pytest

from arithmetic import PadicElement
from utils.errors import FieldMismatch, NotInDomain


def test_valuation_and_reduction(ring3):
    T = ring3.T
    x = PadicElement(T, 3, T ** 4 + T ** 2 + T)
    assert x.residue == T ** 2 + T
    assert x.val == 1
    assert PadicElement(T, 3, T ** 5).is_zero()
    assert PadicElement(T, 3, T ** 5).valuation_text() == ">=3"


def test_divide_by_prime(ring3):
    T = ring3.T
    x = PadicElement(T, 3, T ** 2 + T)
    y = x.divide_by_prime(1)
    assert y.n == 2
    assert y.residue == T + 1
    assert y.is_unit()
    with pytest.raises(NotInDomain):
        y.divide_by_prime(1)


def test_inverse(ring3):
    P = ring3.T ** 2 + 1
    x = PadicElement(P, 3, ring3.T + 1)
    inv = x.inverse()
    assert (x * inv).agrees_with(PadicElement(P, 3, ring3.one))
    with pytest.raises(NotInDomain):
        PadicElement(P, 3, P).inverse()


def test_arithmetic_takes_common_precision(ring3):
    T = ring3.T
    a = PadicElement(T, 4, T + 1)
    b = PadicElement(T, 2, T)
    assert (a + b).n == 2
    assert (a * b).val == 1
    assert (a ** 3).residue == (T + 1) ** 3


def test_primes_do_not_mix(ring3):
    T = ring3.T
    with pytest.raises(FieldMismatch):
        PadicElement(T, 2, T) + PadicElement(T + 1, 2, T)


def test_to_json(ring3):
    T = ring3.T
    assert PadicElement(T, 2, T).to_json() == {"P": "T", "n": 2, "residue": "T", "val": 1}
