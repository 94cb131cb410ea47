import pytest

from arithmetic import read_poly
from searching import QuestionSearcher, WieferichSearcher, lemma9_modulus
from utils.errors import BudgetExceeded, NotMonic


def questions_for(ring, **kwargs):
    return QuestionSearcher(WieferichSearcher(ring), **kwargs)


class TestModulus:

    def test_product_of_shifted_primes(self, ring3):
        T = ring3.T
        assert lemma9_modulus([T, T + 1], ring3) == T ** 2 + 2 * T + 1

    def test_empty_list(self, ring3):
        assert lemma9_modulus([], ring3) == ring3.one
        with pytest.raises(ValueError):
            lemma9_modulus([])


class TestSearch:

    def test_degree_one_has_no_hits(self, ring3):
        assert questions_for(ring3).question1_search(ring3.one, 1, 1) == []

    def test_phi_of_degree_one_prime(self, ring3):
        T = ring3.T
        assert questions_for(ring3).phi_of_one(T + 2) == T

    def test_deterministic(self, ring3):
        first = questions_for(ring3, seed=5).question1_search(ring3.one, 1, 3)
        second = questions_for(ring3, seed=5).question1_search(ring3.one, 1, 3)
        assert first == second
        for hit in first:
            certificate = hit["certificate"]
            assert certificate["squareDivides"] and certificate["PdiffersFromQ"]

    def test_wieferich_modulus(self, ring4):
        P = read_poly(ring4, "T^2 + T + [0,1]")
        b = lemma9_modulus([P])
        assert b == P
        hits = questions_for(ring4).question1_search(b, 1, 2, known_wieferich=[P])
        for hit in hits:
            assert all(row["nonzeroModPi2"] for row in hit["certificate"]["lemma9Mechanism"])

    def test_modulus_must_be_monic(self, ring3):
        with pytest.raises(NotMonic):
            questions_for(ring3).question1_search(read_poly(ring3, "2*T + 1"), 1, 1)

    def test_budget(self, ring3):
        with pytest.raises(BudgetExceeded):
            questions_for(ring3, term_budget=5).question1_search(ring3.one, 1, 3)

    def test_degree_range(self, ring3):
        with pytest.raises(ValueError):
            questions_for(ring3).question1_search(ring3.one, 2, 1)

    def test_explicit_seed_matches_constructor_seed(self, ring3):
        by_constructor = questions_for(ring3, seed=11).question1_search(ring3.one, 1, 3)
        by_argument = questions_for(ring3).question1_search(ring3.one, 1, 3, seed=11)
        assert by_argument == by_constructor
