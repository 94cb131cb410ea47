"""
Explicit families of Wieferich primes: the factorization of V(2) = 1 + T - T^q
and the degree-p primes coming from the roots of H(X) = sum_(i<p) X^i / i!.
"""

from math import factorial
from typing import Dict, List

from loguru import logger

from arithmetic.factorization import factor
from arithmetic.field_tower import build_field
from arithmetic.poly_ring import Poly, PolyRing
from carlitz.basic_sequences import get_sequences
from config.run_config import DEFAULT_SEED
from utils.errors import VerificationFailure
from .search_helper import SearchHelper
from .wieferich_searcher import WieferichSearcher


class RemarkConstructions:
    """
    Constructions of Wieferich primes that do not go through a census.

    Args:
        searcher (WieferichSearcher): provides V(d) and the certificates
        seed (int): factorization seed
    """

    def __init__(self, searcher: WieferichSearcher, seed: int = DEFAULT_SEED):
        self.searcher = searcher
        self.ring = searcher.ring
        self.field = searcher.ring.field
        self.q = self.field.size
        self.seed = seed
        self.sequences = get_sequences(self.ring)

    def v2_factorization(self, seed: int = None) -> Dict:
        """
        Factor V(2) = 1 + T - T^q: q/p primes of degree p, so Wieferich primes of
        degree 2 exist exactly when p = 2 and then there are q/2 of them.

        Args:
            seed (int): factorization seed

        Returns:
            Dict: factors, their degrees and the degree-2 census it implies
        """
        seed = self.seed if seed is None else seed
        p = self.field.p
        V = self.searcher.V_poly(2)
        factorization = factor(V, seed)
        degrees = [P.degree for P, _ in factorization.factors]
        squarefree = all(mult == 1 for _, mult in factorization.factors)
        ok = squarefree and len(degrees) == self.q // p and all(deg == p for deg in degrees)
        return {
            "V2": repr(V),
            "unit": list(self.field.coords(factorization.unit)),
            "factors": [repr(P) for P in factorization.primes()],
            "degrees": degrees,
            "expectedFactors": self.q // p,
            "degree2Census": self.q // 2 if p == 2 else 0,
            "pass": ok
        }

    def _H(self) -> Poly:
        prime_field = build_field(self.field.p, 1, allow_q2=True)
        ring = PolyRing(prime_field, "X")
        return ring.poly([prime_field.inv(prime_field.from_int(factorial(i))) for i in range(self.field.p)])

    def degree_p_construction(self) -> Dict:
        """
        When every root of H lies in F_q, each alpha = -1/s (s a root) makes every prime
        factor of T^q - T - alpha a Wieferich prime of degree p.

        Returns:
            Dict: hypothesis verdict and, when it holds, the certified primes
        """
        p, e = self.field.p, self.field.e
        H = self._H()
        split_degree = SearchHelper.lcm(P.degree for P, _ in factor(H, self.seed).factors)
        record = {"p": p, "q": self.q, "H": repr(H), "splittingDegree": split_degree}
        if e % split_degree:
            logger.info(f"Roots of H need F_(p^{split_degree}); not contained in F_{self.q}")
            record.update({"hypothesis": False, "outcome": "hypothesis S in F_q fails"})
            return record

        field, ring = self.field, self.ring
        lifted = [field.from_int(c) for c in H.coeffs]
        roots = [x for x in field.elements_lex() if ring.evaluate(tuple(lifted), x) == 0]
        if len(roots) != p - 1:
            raise VerificationFailure(f"H has {len(roots)} roots in F_{self.q}, expected {p - 1}")
        marked = {field.neg(field.inv(s)) for s in roots}

        families: List[Dict] = []
        wieferich: List[Dict] = []
        for alpha in field.elements_lex():
            if alpha == 0:
                continue
            predicted = alpha in marked
            f = ring.monomial(self.q) - ring.T - ring.constant(alpha)
            primes = [P for P in factor(f, self.seed).primes() if P.degree == p]
            rows = []
            for P in primes:
                congruent = self._sequence_congruence(P, alpha)
                if predicted:
                    certificate = self.searcher.certify(P)
                    is_wieferich = certificate["direct"] and certificate["bernoulli"]
                    if is_wieferich:
                        wieferich.append(certificate)
                else:
                    is_wieferich = self.searcher.direct_test(P).is_zero()
                if not congruent or is_wieferich != predicted:
                    logger.error(f"Construction check failed at alpha = {field.element(alpha)!r}, P = {P!r}")
                    raise VerificationFailure(f"degree-p construction disagrees at {P!r}", P=repr(P))
                rows.append({"P": repr(P), "wieferich": is_wieferich, "sequenceCongruence": congruent})
            families.append({"alpha": field.element(alpha).to_json(), "predicted": predicted, "primes": rows})

        names = [c["P"] for c in wieferich]
        if len(set(names)) != len(names):
            raise VerificationFailure("a prime divides T^q - T - alpha for two values of alpha")
        lower = (p - 1) * self.q // p
        if len(names) < lower:
            raise VerificationFailure(f"only {len(names)} Wieferich primes, expected at least {lower}")
        logger.info(f"Degree-{p} construction over F_{self.q}: {len(names)} certified Wieferich primes")
        record.update({
            "hypothesis": True,
            "roots": [field.element(s).to_json() for s in roots],
            "families": families,
            "wieferichPrimes": wieferich,
            "count": len(names),
            "lowerBound": lower,
            "pass": True
        })
        return record

    def _sequence_congruence(self, prime: Poly, alpha: int) -> bool:
        """L_k = k! (-alpha)^k mod P for k < p, from T^(q^j) = T + j alpha mod P."""
        field = self.field
        for k in range(field.p):
            value = field.mul(field.from_int(factorial(k)), field.pow(field.neg(alpha), k))
            if self.sequences.L(k) % prime != self.ring.constant(value):
                return False
        return True
