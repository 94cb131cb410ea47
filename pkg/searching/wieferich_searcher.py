"""
Wieferich primes for the Carlitz unit 1: primes P of degree d with
phi_(P-1)(1) = 0 mod P^2, found as the degree-d prime divisors of
V(d) = sum_(i<d) L_(d-1) / L_i.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from loguru import logger
from sympy import Expr

from arithmetic.arithmetic_helper import ArithmeticHelper
from arithmetic.factorization import factor, monic_irreducibles
from arithmetic.poly_ring import Poly, PolyRing
from carlitz.algebras import QuotientAlgebra
from carlitz.basic_sequences import get_sequences
from carlitz.carlitz_module import CarlitzModule, require_prime
from carlitz.power_sums import PowerSums
from config.run_config import DEFAULT_SEED, DEFAULT_TERM_BUDGET, EXHAUSTIVE_PRIME_LIMIT
from utils.errors import BudgetExceeded, VerificationFailure
from .search_helper import SearchHelper

CLASS_INDICATOR_STATEMENT = (
    "the P-part of the class module attached to the P-th Carlitz cyclotomic field "
    "is non trivial if and only if B(q^d - 2) = 0 mod P"
)


@dataclass
class WieferichReport:
    """Census of one degree: N_q(d) primes, M(d) of them Wieferich, with certificates."""

    q: int
    d: int
    nq: int
    m: int
    bound: Expr
    primes: List[Dict] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    exhaustive: bool = False
    non_wieferich: Optional[int] = None
    prime_count_bound_holds: bool = True
    v_degree: Optional[int] = None
    elapsed: Optional[float] = None

    @property
    def n(self) -> int:
        """N(d): primes of degree d that are not Wieferich."""
        return self.nq - self.m

    @property
    def bound_holds(self) -> bool:
        return SearchHelper.strictly_exceeds(self.n, self.bound)

    @property
    def m_bound_holds(self) -> bool:
        """M(d) d <= q^(d-1), the bound as usually stated."""
        return self.m * self.d <= self.q ** (self.d - 1)

    @property
    def m_degree_bound_holds(self) -> bool:
        """M(d) d <= deg V(d): every Wieferich prime of degree d divides V(d)."""
        return self.v_degree is None or self.m * self.d <= self.v_degree

    def to_json(self, include_timing: bool = False) -> Dict:
        record = {
            "q": self.q,
            "d": self.d,
            "Nq": self.nq,
            "M": self.m,
            "N": self.n,
            "bound": str(self.bound),
            "boundHolds": self.bound_holds,
            "mBoundHolds": self.m_bound_holds,
            "mDegreeBoundHolds": self.m_degree_bound_holds,
            "primeCountBoundHolds": self.prime_count_bound_holds,
            "primes": self.primes,
            "seed": self.seed,
            "exhaustive": self.exhaustive
        }
        if self.v_degree is not None:
            record["degV"] = self.v_degree
            record["degVIsQPowerDMinus1"] = self.v_degree == self.q ** (self.d - 1)
        if self.non_wieferich is not None:
            record["nonWieferich"] = self.non_wieferich
        if include_timing and self.elapsed is not None:
            record["timing"] = self.elapsed
        return record

    def csv_row(self) -> List:
        return [self.d, self.nq, self.m, self.n, str(self.bound)]


class WieferichSearcher:
    """
    Enumerates and certifies Wieferich primes degree by degree.

    Args:
        ring (PolyRing): A = F_q[T]
        seed (int): seed of the equal-degree factorization
        term_budget (int): largest deg V(d) handled
        exhaustive_limit (int): largest N_q(d) for which every prime is tested directly
    """

    def __init__(self, ring: PolyRing, seed: int = DEFAULT_SEED,
                 term_budget: int = DEFAULT_TERM_BUDGET,
                 exhaustive_limit: int = EXHAUSTIVE_PRIME_LIMIT):
        self.ring = ring
        self.q = ring.field.size
        self.seed = seed
        self.term_budget = term_budget
        self.exhaustive_limit = exhaustive_limit
        self.sequences = get_sequences(ring)
        self.carlitz = CarlitzModule(ring)
        self.power_sums = PowerSums(ring, term_budget)

    def V_poly(self, d: int) -> Poly:
        """
        V(d) = sum_(i<d) L_(d-1) / L_i, each quotient exact.

        Args:
            d (int): degree, at least 1

        Returns:
            Poly: V(d), of degree deg L_(d-1); that is q^(d-1) only when d = 2
        """
        if d < 1:
            raise ValueError(f"d must be at least 1, got {d}")
        expected = self.sequences.deg_L(d - 1)
        if expected > self.term_budget:
            raise BudgetExceeded(f"deg V({d}) = {expected} exceeds the term budget", budget=self.term_budget)
        top = self.sequences.L(d - 1)
        total = self.ring.zero
        for i in range(d):
            total = total + top.exact_div(self.sequences.L(i))
        if total.degree != expected:
            raise VerificationFailure(f"deg V({d}) = {total.degree}, expected {expected}")
        return total

    # --- certificates ----------------------------------------------------------

    def direct_test(self, prime: Poly) -> Poly:
        """phi_(P-1)(1) mod P^2 along the T-digits of P - 1."""
        algebra = QuotientAlgebra(self.ring, prime * prime)
        return self.carlitz.phi_apply_digits(prime - 1, self.ring.one, algebra)

    def taelman_class_indicator(self, prime: Poly, bernoulli: Optional[Poly] = None) -> Dict:
        """
        B(q^d - 2) mod P together with the class-module statement it decides.

        Args:
            prime (Poly): prime P of degree d
            bernoulli (Poly): B(q^d - 2) mod P when already known

        Returns:
            Dict: residue, verdict and statement
        """
        require_prime(prime)
        if bernoulli is None:
            bernoulli = self.power_sums.bernoulli_goss_mod(self.q ** prime.degree - 2, prime)
        return {
            "P": repr(prime),
            "bernoulliModP": repr(bernoulli),
            "nontrivial": bernoulli.is_zero(),
            "statement": CLASS_INDICATOR_STATEMENT
        }

    def certify(self, prime: Poly) -> Dict:
        """
        Both Wieferich certificates for ``prime``: the direct congruence mod P^2 and
        B(q^d - 2) mod P.

        Args:
            prime (Poly): prime P

        Returns:
            Dict: residues, verdicts and the class indicator
        """
        require_prime(prime)
        direct = self.direct_test(prime)
        bernoulli = self.power_sums.bernoulli_goss_mod(self.q ** prime.degree - 2, prime)
        return {
            "P": repr(prime),
            "d": prime.degree,
            "phiPMinus1ModP2": repr(direct),
            "bernoulliModP": repr(bernoulli),
            "direct": direct.is_zero(),
            "bernoulli": bernoulli.is_zero(),
            "agree": direct.is_zero() == bernoulli.is_zero(),
            "classIndicator": self.taelman_class_indicator(prime, bernoulli)
        }

    # --- census --------------------------------------------------------------------

    def wieferich_divisors(self, d: int, seed: Optional[int] = None) -> List[Poly]:
        """Degree-d prime divisors of gcd(V(d), T^(q^d) - T), not yet certified."""
        seed = self.seed if seed is None else seed
        V = self.V_poly(d)
        if V.degree < d:
            return []
        h = SearchHelper.frobenius_of_T(V, d)
        g = V.gcd(h - self.ring.T)
        if g.degree < d:
            return []
        return [prime for prime in factor(g, seed).primes() if prime.degree == d]

    def wieferich_primes(self, d: int, seed: Optional[int] = None, exhaustive: bool = False) -> WieferichReport:
        """
        Wieferich primes of degree d via gcd(V(d), T^(q^d) - T), each double-certified.

        Args:
            d (int): degree
            seed (int): factorization seed, defaults to the searcher's
            exhaustive (bool): also test every prime of degree d directly

        Returns:
            WieferichReport: counts, exact bound and certified primes
        """
        seed = self.seed if seed is None else seed
        start = time.time()
        logger.info(f"Searching Wieferich primes of degree {d} over F_{self.q}")
        found = self.wieferich_divisors(d, seed)
        certificates = []
        for prime in found:
            certificate = self.certify(prime)
            if not (certificate["direct"] and certificate["bernoulli"]):
                logger.error(f"Certificate mismatch for {prime!r}: {certificate}")
                raise VerificationFailure(f"{prime!r} divides V({d}) but fails a Wieferich certificate",
                                          P=repr(prime))
            certificates.append(certificate)
        if len({c["P"] for c in certificates}) != len(certificates):
            raise VerificationFailure(f"duplicate Wieferich primes of degree {d}")

        nq = ArithmeticHelper.necklace_count(self.q, d)
        report = WieferichReport(self.q, d, nq, len(certificates), SearchHelper.lemma7_bound(self.q, d),
                                 primes=certificates, seed=seed, v_degree=self.sequences.deg_L(d - 1),
                                 prime_count_bound_holds=SearchHelper.strictly_exceeds(
                                     nq, SearchHelper.prime_count_bound(self.q, d)))
        if exhaustive:
            if nq > self.exhaustive_limit:
                logger.warning(f"N_q({d}) = {nq} exceeds {self.exhaustive_limit}; skipping exhaustive confirmation")
            else:
                self._confirm_exhaustively(report, found)
        report.elapsed = SearchHelper.elapsed(start)
        logger.info(f"Degree {d}: M = {report.m} of N_q = {nq} primes ({report.elapsed}s)")
        return report

    def _confirm_exhaustively(self, report: WieferichReport, found: List[Poly]):
        direct_hits = [P for P in monic_irreducibles(self.ring, report.d) if self.direct_test(P).is_zero()]
        if direct_hits != sorted(found, key=self.ring.sort_key):
            logger.error(f"Exhaustive Wieferich set {direct_hits} differs from the V({report.d}) set {found}")
            raise VerificationFailure(f"exhaustive and V({report.d}) Wieferich sets differ")
        report.exhaustive = True
        report.non_wieferich = report.nq - len(direct_hits)

    def counts_table(self, dmax: int, seed: Optional[int] = None) -> List[WieferichReport]:
        """
        Reports for d = 1..dmax; each row must satisfy N(d) > bound and M(d) d <= deg V(d).

        Args:
            dmax (int): largest degree
            seed (int): factorization seed

        Returns:
            List[WieferichReport]: one report per degree
        """
        reports = []
        for d in range(1, dmax + 1):
            report = self.wieferich_primes(d, seed)
            if not report.bound_holds:
                raise VerificationFailure(f"N({d}) = {report.n} does not exceed {report.bound}", d=d)
            if not report.m_degree_bound_holds:
                raise VerificationFailure(f"M({d}) = {report.m} exceeds deg V({d})/{d}", d=d)
            if not report.m_bound_holds:
                logger.warning(f"M({d}) = {report.m} exceeds q^(d-1)/d = {self.q ** (d - 1)}/{d}")
            reports.append(report)
        return reports

    def criteria_agreement(self, d: int) -> List[Dict]:
        """
        P | V(d), P^2 | phi_(P-1)(1) and P | B(q^d - 2) on every prime of degree d.

        Args:
            d (int): degree

        Returns:
            List[Dict]: one row per prime with the three verdicts
        """
        V = self.V_poly(d)
        rows = []
        for prime in monic_irreducibles(self.ring, d):
            certificate = self.certify(prime)
            divides = prime.divides(V)
            rows.append({
                "P": repr(prime),
                "dividesV": divides,
                "direct": certificate["direct"],
                "bernoulli": certificate["bernoulli"],
                "pass": divides == certificate["direct"] == certificate["bernoulli"]
            })
        return rows
