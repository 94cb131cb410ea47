"""
P-adic behaviour of the Carlitz module: valuations of D_i and L_i, the P-adic
exponential and logarithm, solvability of phi_P(x) = phi_(P-1)(1), the structure
of C(A/P^n) and the search for a in A \\ PA with P^2 | phi_a(1).
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from loguru import logger
from sympy import Rational

from arithmetic.factorization import factor
from arithmetic.padic_element import PadicElement, prime_power
from arithmetic.poly_ring import Poly, PolyRing
from config.run_config import (DEFAULT_CANDIDATE_BUDGET, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED,
                               EXHAUSTIVE_MODULE_BUDGET)
from utils.errors import (BudgetExceeded, NotInDomain, UnexpectedValuation,
                          VerificationFailure)
from .algebras import PadicAlgebra, QuotientAlgebra
from .basic_sequences import get_sequences
from .carlitz_module import CarlitzModule, require_prime


@dataclass
class Lemma4Result:
    """Either a verified solution x of phi_P(x) = w or the Eisenstein obstruction."""

    prime: Poly
    n: int
    w: PadicElement
    solution: Optional[PadicElement] = None
    eisenstein: Optional[Dict] = None
    transcript: List[str] = field(default_factory=list)

    @property
    def solvable(self) -> bool:
        return self.solution is not None

    def to_json(self) -> Dict:
        record = {
            "P": repr(self.prime),
            "n": self.n,
            "w": self.w.to_json(),
            "kind": "solution" if self.solvable else "obstruction",
            "transcript": list(self.transcript)
        }
        if self.solvable:
            record["x"] = self.solution.to_json()
        else:
            record["eisenstein"] = self.eisenstein
        return record


class PadicAnalytics:
    """
    P-adic counterparts of e_C and log_C and the checks built on them.

    Args:
        ring (PolyRing): A = F_q[T]
        seed (int): seed for sampled checks
        module_budget (int): largest |A/P^n| checked exhaustively
        candidate_budget (int): largest number of candidates in corollary3_search
        sample_count (int): random elements used outside the exhaustive budget
    """

    def __init__(self, ring: PolyRing, seed: int = DEFAULT_SEED,
                 module_budget: int = EXHAUSTIVE_MODULE_BUDGET,
                 candidate_budget: int = DEFAULT_CANDIDATE_BUDGET,
                 sample_count: int = DEFAULT_SAMPLE_COUNT):
        self.ring = ring
        self.q = ring.field.size
        self.seed = seed
        self.module_budget = module_budget
        self.candidate_budget = candidate_budget
        self.sample_count = sample_count
        self.sequences = get_sequences(ring)
        self.carlitz = CarlitzModule(ring)

    # --- valuations ----------------------------------------------------------

    def vP_of_sequences(self, i: int, d: int) -> Tuple[int, Rational]:
        """
        (v_P(L_i), v_P(D_i)) for a prime of degree d.

        Args:
            i (int): index
            d (int): degree of P

        Returns:
            Tuple[int, Rational]: [i/d] and (q^i - q^(i - [i/d] d)) / (q^d - 1)
        """
        if i < 0 or d < 1:
            raise ValueError(f"need i >= 0 and d >= 1, got i = {i}, d = {d}")
        k = i // d
        return k, Rational(self.q ** i - self.q ** (i - k * d), self.q ** d - 1)

    def _vD(self, i: int, d: int) -> int:
        vD = self.vP_of_sequences(i, d)[1]
        if not vD.is_integer:
            raise ValueError(f"v_P(D_{i}) = {vD} is not integral")
        return int(vD)

    # --- exponential and logarithm ---------------------------------------------

    def _series(self, x: PadicElement, kind: str) -> PadicElement:
        if x.val < 1:
            raise NotInDomain(f"{'log_C' if kind == 'L' else 'e_C'} needs v_P(x) >= 1, "
                              f"got {x.valuation_text()}")
        prime, n = x.prime, x.n
        if x.is_zero():
            return x
        ring, e, d = self.ring, self.ring.field.e, prime.degree
        total = x.residue
        i = 1
        while True:
            k = i // d if kind == "L" else self._vD(i, d)
            if self.q ** i * x.val - k >= n:
                break
            modulus = prime_power(prime, n + k)
            power = x.residue.coeffs
            for _ in range(i):
                power = ring.frobenius_mod(power, e, modulus.coeffs)
            weight = self.sequences.L(i) if kind == "L" else self.sequences.D(i)
            numerator = Poly(ring, power).exact_div(prime_power(prime, k)) if k else Poly(ring, power)
            unit = weight.exact_div(prime_power(prime, k)) if k else weight
            target = prime_power(prime, n)
            total = total + (numerator * unit.invmod(target)) % target
            i += 1
        return PadicElement(prime, n, total)

    def log_C_P(self, x: PadicElement) -> PadicElement:
        """
        log_C(x) = sum_i x^(q^i) / L_i for v_P(x) >= 1.

        Args:
            x (PadicElement): argument known modulo P^n

        Returns:
            PadicElement: log_C(x) modulo P^n
        """
        return self._series(x, "L")

    def e_C_P(self, x: PadicElement) -> PadicElement:
        """e_C(x) = sum_i x^(q^i) / D_i for v_P(x) >= 1, modulo P^n."""
        return self._series(x, "D")

    # --- Lemma 4 -------------------------------------------------------------

    def phi_P_minus_1_of_one(self, prime: Poly, n: int) -> PadicElement:
        algebra = PadicAlgebra(self.ring, prime, n)
        return self.carlitz.phi_apply(prime - 1, algebra.element(self.ring.one), algebra)

    def eisenstein_record(self, prime: Poly, w: PadicElement) -> Dict:
        """Coefficient conditions making phi_P(X) - w Eisenstein at P."""
        coeffs = self.carlitz.phi_coeffs(prime)
        d = prime.degree
        return {
            "lowerCoefficientsDivisible": all(prime.divides(coeffs[k]) for k in range(d)),
            "leadingCoefficientUnit": coeffs[d].degree == 0,
            "constantValuation": w.valuation_text()
        }

    def lemma4_solve(self, prime: Poly, n: int) -> Lemma4Result:
        """
        Solve phi_P(x) = phi_(P-1)(1) in A/P^n, or exhibit the Eisenstein obstruction.

        Args:
            prime (Poly): prime P
            n (int): precision exponent, at least 2

        Returns:
            Lemma4Result: substitution-verified solution, or the obstruction record
        """
        require_prime(prime)
        if n < 2:
            raise ValueError(f"lemma4_solve needs n >= 2, got {n}")
        w_fine = self.phi_P_minus_1_of_one(prime, n + 1)
        w = w_fine.with_precision(n)
        transcript = [f"w = phi_(P-1)(1) mod P^{n + 1} has valuation {w_fine.valuation_text()}"]
        if w_fine.val == 0:
            raise UnexpectedValuation(f"phi_(P-1)(1) is a unit at {prime!r}", P=repr(prime))
        if w_fine.val == 1:
            transcript.append("valuation 1: phi_P(X) - w is Eisenstein, no solution in A_P")
            return Lemma4Result(prime, n, w, eisenstein=self.eisenstein_record(prime, w), transcript=transcript)
        log_w = self.log_C_P(w_fine)
        y = log_w.divide_by_prime(1)
        x = self.e_C_P(y)
        transcript.append(f"y = log_C(w)/P has valuation {y.valuation_text()}")
        transcript.append(f"x = e_C(y) has valuation {x.valuation_text()}")
        algebra = PadicAlgebra(self.ring, prime, n)
        image = self.carlitz.phi_apply(prime, x, algebra)
        if not image.agrees_with(w):
            logger.error(f"phi_P(x) != w mod P^{n} for P = {prime!r}")
            raise VerificationFailure(f"Lemma 4 solution failed substitution at {prime!r}", P=repr(prime))
        transcript.append(f"verified phi_P(x) = w mod P^{n}")
        return Lemma4Result(prime, n, w, solution=x, transcript=transcript)

    # --- Lemma 8 ---------------------------------------------------------------

    def phi_P_valuation_step(self, prime: Poly, a: Poly) -> bool:
        """v_P(phi_P(a)) = 1 + v_P(a) for nonzero a in PA."""
        if a.is_zero() or not prime.divides(a):
            raise ValueError(f"{a!r} is not a nonzero multiple of {prime!r}")
        va = a.valuation(prime)
        algebra = QuotientAlgebra(self.ring, prime_power(prime, va + 2))
        image = self.carlitz.phi_apply(prime, algebra.reduce(a), algebra)
        return not image.is_zero() and image.valuation(prime) == va + 1

    def module_structure_check(self, prime: Poly, n: int) -> Dict:
        """
        C(A/P^n) is killed by M = P^(n-1)(P-1) and has an element of annihilator exactly M.

        Args:
            prime (Poly): prime P
            n (int): exponent, at least 1

        Returns:
            Dict: annihilator verdict, witness and the mode used
        """
        require_prime(prime)
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        ring = self.ring
        modulus = prime_power(prime, n)
        algebra = QuotientAlgebra(ring, modulus)
        annihilator = prime_power(prime, n - 1) * (prime - 1)
        size = self.q ** modulus.degree
        exhaustive = size <= self.module_budget
        if exhaustive:
            elements = list(ring.polys_below(modulus.degree))
        else:
            logger.warning(f"|A/P^{n}| = {size} exceeds the exhaustive budget; annihilator-only mode")
            rng = random.Random(self.seed)
            elements = [Poly(ring, ring.strip([rng.randrange(self.q) for _ in range(modulus.degree)]))
                        for _ in range(self.sample_count)]
        killed = all(self.carlitz.phi_apply(annihilator, x, algebra).is_zero() for x in elements)
        witness = None
        if exhaustive:
            cofactors = [annihilator // ell for ell in factor(annihilator, self.seed).primes()]
            for x in elements:
                if all(not self.carlitz.phi_apply(c, x, algebra).is_zero() for c in cofactors):
                    witness = x
                    break
        return {
            "P": repr(prime),
            "n": n,
            "annihilator": repr(annihilator),
            "mode": "exhaustive" if exhaustive else "annihilator-only",
            "checked": len(elements),
            "annihilatorKillsAll": killed,
            "witness": repr(witness) if witness is not None else None,
            "pass": killed and (witness is not None or not exhaustive)
        }

    # --- Corollary 3 -------------------------------------------------------------

    def is_wieferich(self, prime: Poly) -> bool:
        """P^2 | phi_(P-1)(1)."""
        return self.phi_P_minus_1_of_one(prime, 2).is_zero()

    def _candidates(self, degree_cap: int):
        """Nonzero a of degree <= cap ordered by (degree, coefficients)."""
        ring = self.ring
        for degree in range(degree_cap + 1):
            for coeffs in itertools.product(ring.field.elements_lex(), repeat=degree + 1):
                if coeffs[-1]:
                    yield Poly(ring, coeffs)

    def corollary3_search(self, prime: Poly, degree_cap: int) -> Optional[Poly]:
        """
        First a of degree <= cap, a not in PA, with P^2 | phi_a(1).

        Args:
            prime (Poly): prime P
            degree_cap (int): largest degree searched

        Returns:
            Optional[Poly]: the witness, or None
        """
        require_prime(prime)
        ring = self.ring
        total = sum(self.q ** k for k in range(degree_cap + 2))
        if total > self.candidate_budget:
            raise BudgetExceeded(f"{total} candidates exceed the candidate budget", budget=self.candidate_budget)
        algebra = QuotientAlgebra(ring, prime * prime)
        images = [ring.one]
        for _ in range(degree_cap):
            images.append(self.carlitz.phi_T(images[-1], algebra))
        witness = None
        for a in self._candidates(degree_cap):
            if prime.divides(a):
                continue
            value = ()
            for c, u in zip(a.coeffs, images):
                if c:
                    value = ring.add(value, ring.scale(u.coeffs, c))
            if not ring.rem(value, algebra.modulus.coeffs):
                witness = a
                break
        wieferich = self.is_wieferich(prime)
        if witness is not None and not wieferich:
            raise VerificationFailure(f"{witness!r} kills 1 mod P^2 although {prime!r} is not Wieferich")
        if witness is None and wieferich and degree_cap >= prime.degree:
            raise VerificationFailure(f"no witness up to degree {degree_cap} although {prime!r} is Wieferich")
        return witness
