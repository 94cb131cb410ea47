import pytest

from arithmetic import FieldTower, build_field, embed, frobenius, roots_of_unity
from arithmetic.arithmetic_helper import ArithmeticHelper
from utils.errors import DescentFailure, MNotCoprimeToP, NonPrimeP, QTooSmall


class TestFieldDescriptor:

    def test_lexicographic_moduli(self):
        assert build_field(2, 2).modulus == (1, 1, 1)
        assert build_field(3, 2).modulus == (1, 0, 1)
        assert build_field(5, 1).modulus == (0, 1)

    def test_build_is_cached(self):
        assert build_field(3, 2) is build_field(3, 2)

    def test_f4_arithmetic(self):
        f4 = build_field(2, 2)
        omega = 2
        assert f4.mul(omega, omega) == 3
        assert f4.add(f4.mul(omega, omega), omega) == 1
        assert f4.pow(omega, 3) == 1
        assert f4.pow(omega, 0) == 1
        assert f4.frobenius(omega) == 3
        assert f4.inv(omega) == 3

    def test_every_nonzero_element_has_an_inverse(self):
        f9 = build_field(3, 2)
        for a in range(1, f9.size):
            assert f9.mul(a, f9.inv(a)) == 1

    def test_generator_is_primitive(self):
        f9 = build_field(3, 2)
        assert f9.multiplicative_order(f9.generator) == 8

    def test_elements_lex_orders_coordinates(self):
        f9 = build_field(3, 2)
        ordered = [f9.coords(c) for c in f9.elements_lex()]
        assert ordered == sorted(ordered)
        assert len(ordered) == 9

    def test_field_element_operators(self):
        f4 = build_field(2, 2)
        omega = f4.element(2)
        assert (omega * omega + omega).code == 1
        assert (omega ** 3).code == 1
        assert (omega / omega).code == 1
        assert frobenius(omega, 1).code == 3
        assert omega.to_json() == [0, 1]

    def test_to_dict(self):
        assert build_field(3, 2).to_dict() == {"p": 3, "e": 2, "modulus": [1, 0, 1]}


class TestBuildErrors:

    def test_q_two_needs_override(self):
        with pytest.raises(QTooSmall):
            build_field(2, 1)
        assert build_field(2, 1, allow_q2=True).size == 2

    def test_non_prime_characteristic(self):
        with pytest.raises(NonPrimeP):
            build_field(4, 1)
        with pytest.raises(NonPrimeP):
            build_field(1, 3)


class TestTower:

    def test_lift_and_descend(self):
        tower = FieldTower(build_field(3, 1), 2)
        for c in range(3):
            assert tower.descend(tower.lift(c)) == c

    def test_descend_outside_base(self):
        tower = FieldTower(build_field(3, 1), 2)
        with pytest.raises(DescentFailure):
            tower.descend(3)

    def test_q_frobenius_fixes_the_base(self):
        tower = FieldTower(build_field(2, 2), 3)
        for c in range(4):
            lifted = tower.lift(c)
            assert tower.frobenius_q(lifted) == lifted
        assert all(tower.frobenius_q(c, 3) == c for c in range(tower.ext.size))

    def test_embedding_is_a_ring_map(self):
        f4 = build_field(2, 2)
        f16 = build_field(2, 4)
        for a in range(4):
            for b in range(4):
                x, y = f4.element(a), f4.element(b)
                assert embed(x * y, f16) == embed(x, f16) * embed(y, f16)
                assert embed(x + y, f16) == embed(x, f16) + embed(y, f16)


class TestRootsOfUnity:

    def test_fourth_roots_over_f3(self):
        ext, roots = roots_of_unity(4, build_field(3, 1))
        assert ext.size == 9
        assert len(roots) == 4
        assert all((r ** 4).code == 1 for r in roots)
        assert roots == sorted(roots)

    def test_m_one(self):
        ext, roots = roots_of_unity(1, build_field(5, 1))
        assert ext.size == 5
        assert [r.code for r in roots] == [1]

    def test_m_divisible_by_p(self):
        with pytest.raises(MNotCoprimeToP):
            roots_of_unity(6, build_field(3, 1))


class TestArithmeticHelper:

    @pytest.mark.parametrize("q, d, expected", [(3, 1, 3), (3, 2, 3), (4, 2, 6), (2, 3, 2), (3, 3, 8), (5, 2, 10)])
    def test_necklace_count(self, q, d, expected):
        assert ArithmeticHelper.necklace_count(q, d) == expected

    def test_multiplicative_order(self):
        assert ArithmeticHelper.multiplicative_order(3, 4) == 2
        assert ArithmeticHelper.multiplicative_order(4, 1) == 1

    def test_rank_mod_p(self):
        assert ArithmeticHelper.rank_mod_p([[1, 2], [2, 4]], 3) == 1
        assert ArithmeticHelper.rank_mod_p([[1, 0], [0, 1]], 2) == 2
        assert ArithmeticHelper.rank_mod_p([], 5) == 0
