"""
Experimental search for primes Q = 1 mod b with phi_Q(1) not squarefree.
"""

from typing import Dict, List, Optional, Sequence

from loguru import logger

from arithmetic.factorization import factor, is_squarefree, monic_irreducibles
from arithmetic.poly_ring import Poly, PolyRing
from carlitz.algebras import QuotientAlgebra
from carlitz.carlitz_module import CarlitzModule
from config.run_config import DEFAULT_SEED, DEFAULT_TERM_BUDGET
from utils.errors import BudgetExceeded, NotMonic, VerificationFailure
from .wieferich_searcher import WieferichSearcher


def lemma9_modulus(primes: Sequence[Poly], ring: Optional[PolyRing] = None) -> Poly:
    """
    b = 1 + prod(P_i - 1), and b = 1 for an empty list.

    Args:
        primes (Sequence[Poly]): known Wieferich primes
        ring (PolyRing): needed only when ``primes`` is empty

    Returns:
        Poly: the monic modulus b
    """
    if not primes:
        if ring is None:
            raise ValueError("an empty prime list needs the ring")
        return ring.one
    product = primes[0].ring.one
    for prime in primes:
        product = product * (prime - 1)
    return product + 1


class QuestionSearcher:
    """
    Looks for primes Q = 1 mod b such that some P^2 divides phi_Q(1).

    Args:
        searcher (WieferichSearcher): direct Wieferich test for the hits
        seed (int): factorization seed
        term_budget (int): largest q^(deg Q - 1) handled
    """

    def __init__(self, searcher: WieferichSearcher, seed: int = DEFAULT_SEED,
                 term_budget: int = DEFAULT_TERM_BUDGET):
        self.searcher = searcher
        self.ring = searcher.ring
        self.q = self.ring.field.size
        self.seed = seed
        self.term_budget = term_budget
        self.carlitz = CarlitzModule(self.ring)

    def phi_of_one(self, a: Poly) -> Poly:
        return self.carlitz.phi_apply_digits(a, self.ring.one)

    def question1_search(self, b: Poly, dmin: int, dmax: int,
                         known_wieferich: Sequence[Poly] = (), seed: Optional[int] = None) -> List[Dict]:
        """
        Primes Q of degree dmin..dmax with Q = 1 mod b and phi_Q(1) not squarefree.

        Args:
            b (Poly): monic modulus
            dmin (int): smallest degree
            dmax (int): largest degree
            known_wieferich (Sequence[Poly]): Wieferich primes P_i checked against each hit
            seed (int): seed for factoring phi_Q(1), defaults to the searcher's

        Returns:
            List[Dict]: hits (Q, P, certificate) in lexicographic order of Q
        """
        if not b.is_monic():
            raise NotMonic(f"b = {b!r} must be monic")
        if dmin < 1 or dmax < dmin:
            raise ValueError(f"invalid degree range {dmin}..{dmax}")
        if self.q ** (dmax - 1) > self.term_budget:
            raise BudgetExceeded(f"phi_Q(1) of degree about {self.q ** (dmax - 1)} exceeds the term budget",
                                 budget=self.term_budget)
        seed = self.seed if seed is None else seed
        target = self.ring.one % b
        hits, tested = [], 0
        for d in range(dmin, dmax + 1):
            for Q in monic_irreducibles(self.ring, d):
                if Q % b != target:
                    continue
                tested += 1
                value = self.phi_of_one(Q)
                if is_squarefree(value):
                    continue
                hits.append(self._certify_hit(Q, value, known_wieferich, seed))
        logger.info(f"Question 1 search b = {b!r}, degrees {dmin}..{dmax}: {tested} primes tested, {len(hits)} hits")
        return hits

    def _certify_hit(self, Q: Poly, value: Poly, known_wieferich: Sequence[Poly], seed: int) -> Dict:
        repeated = [P for P, mult in factor(value, seed).factors if mult >= 2]
        if not repeated:
            raise VerificationFailure(f"phi_Q(1) is not squarefree yet has no repeated factor, Q = {Q!r}")
        P = repeated[0]
        square_divides = (P * P).divides(value)
        distinct = P != Q
        wieferich = self.searcher.direct_test(P).is_zero()
        mechanism = []
        for Pi in known_wieferich:
            if Q.gcd(Pi - 1).degree == 0:
                residue = QuotientAlgebra(self.ring, Pi * Pi).reduce(value)
                mechanism.append({"Pi": repr(Pi), "nonzeroModPi2": not residue.is_zero()})
        ok = square_divides and distinct and wieferich and all(row["nonzeroModPi2"] for row in mechanism)
        if not ok:
            logger.error(f"Question 1 hit Q = {Q!r}, P = {P!r} failed re-verification")
            raise VerificationFailure(f"hit Q = {Q!r}, P = {P!r} failed re-verification", Q=repr(Q), P=repr(P))
        logger.debug(f"Question 1 hit: Q = {Q!r}, P^2 | phi_Q(1) with P = {P!r}")
        return {
            "Q": repr(Q),
            "P": repr(P),
            "certificate": {
                "squareDivides": square_divides,
                "PdiffersFromQ": distinct,
                "PisWieferich": wieferich,
                "lemma9Mechanism": mechanism
            }
        }
