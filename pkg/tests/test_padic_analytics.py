import pytest
from sympy import Rational

from arithmetic import PadicElement, monic_irreducibles, read_poly
from carlitz import PadicAnalytics, get_sequences
from searching import WieferichSearcher
from utils.errors import BudgetExceeded, NotInDomain, NotPrime


class TestValuations:

    def test_at_degree_one(self, ring3):
        padic = PadicAnalytics(ring3)
        assert padic.vP_of_sequences(2, 1) == (2, Rational(4))
        seq = get_sequences(ring3)
        T = ring3.T
        assert seq.D(2).valuation(T) == 4
        assert seq.L(2).valuation(T) == 2

    def test_at_degree_two(self, ring3):
        padic = PadicAnalytics(ring3)
        P = read_poly(ring3, "T^2 + 1")
        seq = get_sequences(ring3)
        for i in range(4):
            vL, vD = padic.vP_of_sequences(i, 2)
            assert seq.L(i).valuation(P) == vL
            assert seq.D(i).valuation(P) == vD


class TestSeries:

    def test_log_needs_positive_valuation(self, ring3):
        padic = PadicAnalytics(ring3)
        with pytest.raises(NotInDomain):
            padic.log_C_P(PadicElement(ring3.T, 3, ring3.one))

    def test_exp_of_log(self, ring3):
        padic = PadicAnalytics(ring3)
        P = read_poly(ring3, "T^2 + 1")
        x = PadicElement(P, 4, P * P * (ring3.T + 2))
        assert padic.e_C_P(padic.log_C_P(x)).agrees_with(x)


class TestLemma4:

    def test_obstruction_for_non_wieferich(self, ring3):
        padic = PadicAnalytics(ring3)
        result = padic.lemma4_solve(read_poly(ring3, "T^2 + 1"), 3)
        assert not result.solvable
        record = result.to_json()
        assert record["kind"] == "obstruction"
        assert record["eisenstein"]["lowerCoefficientsDivisible"]
        assert record["eisenstein"]["leadingCoefficientUnit"]
        assert record["eisenstein"]["constantValuation"] == 1

    def test_solution_for_wieferich(self, ring4):
        padic = PadicAnalytics(ring4)
        result = padic.lemma4_solve(read_poly(ring4, "T^2 + T + [0,1]"), 3)
        assert result.solvable
        assert result.to_json()["kind"] == "solution"
        assert result.transcript[-1].startswith("verified")

    @pytest.mark.parametrize("fixture", ["ring3", "ring4", "ring5"])
    def test_solvable_exactly_for_divisors_of_v(self, request, fixture):
        ring = request.getfixturevalue(fixture)
        padic = PadicAnalytics(ring)
        searcher = WieferichSearcher(ring)
        for d in (1, 2):
            V = searcher.V_poly(d)
            for P in monic_irreducibles(ring, d):
                assert padic.lemma4_solve(P, 2).solvable == P.divides(V), repr(P)

    def test_precision_must_be_at_least_two(self, ring3):
        with pytest.raises(ValueError):
            PadicAnalytics(ring3).lemma4_solve(ring3.T, 1)


class TestModuleStructure:

    def test_degree_one_prime(self, ring3):
        record = PadicAnalytics(ring3).module_structure_check(ring3.T, 1)
        assert record["annihilator"] == repr(ring3.T - 1)
        assert record["mode"] == "exhaustive"
        assert record["pass"]

    @pytest.mark.parametrize("fixture, n", [("ring3", 2), ("ring3", 3), ("ring4", 2)])
    def test_quadratic_primes(self, request, fixture, n):
        ring = request.getfixturevalue(fixture)
        padic = PadicAnalytics(ring)
        for P in monic_irreducibles(ring, 2)[:2]:
            record = padic.module_structure_check(P, n)
            assert record["pass"], record
            assert record["witness"] is not None

    def test_annihilator_only_mode(self, ring5):
        padic = PadicAnalytics(ring5, module_budget=100, sample_count=20)
        record = padic.module_structure_check(read_poly(ring5, "T^2 + 2"), 2)
        assert record["mode"] == "annihilator-only"
        assert record["annihilatorKillsAll"]
        assert record["pass"]

    def test_valuation_step(self, ring3):
        padic = PadicAnalytics(ring3)
        P = read_poly(ring3, "T^2 + 1")
        assert padic.phi_P_valuation_step(P, P * (ring3.T + 1))
        assert padic.phi_P_valuation_step(P, P ** 2)
        with pytest.raises(ValueError):
            padic.phi_P_valuation_step(P, ring3.T)


class TestCorollary3:

    def test_witness_for_wieferich(self, ring4):
        padic = PadicAnalytics(ring4)
        P = read_poly(ring4, "T^2 + T + [0,1]")
        assert padic.is_wieferich(P)
        witness = padic.corollary3_search(P, 2)
        assert witness is not None
        assert not P.divides(witness)

    def test_no_witness_otherwise(self, ring3):
        padic = PadicAnalytics(ring3)
        for P in monic_irreducibles(ring3, 2):
            assert not padic.is_wieferich(P)
            assert padic.corollary3_search(P, 2) is None

    def test_budget(self, ring3):
        padic = PadicAnalytics(ring3, candidate_budget=10)
        with pytest.raises(BudgetExceeded):
            padic.corollary3_search(ring3.T, 3)

    def test_needs_prime(self, ring3):
        with pytest.raises(NotPrime):
            PadicAnalytics(ring3).corollary3_search(ring3.T ** 2, 1)
