"""
Power sums S_j(i) over monic polynomials and the Bernoulli-Goss numbers B(i).
"""

from typing import Dict, Optional

from loguru import logger

from arithmetic.poly_ring import Poly, PolyRing
from arithmetic.rational_function import RationalFunction
from config.run_config import DEFAULT_TERM_BUDGET
from utils.errors import BudgetExceeded, COutOfRange, NonIntegralResult
from .algebras import QuotientAlgebra
from .basic_sequences import get_sequences
from .carlitz_module import CarlitzModule, require_prime


class PowerSums:
    """
    Exact power sums, Bernoulli-Goss numbers and the congruences relating them.

    Args:
        ring (PolyRing): A = F_q[T]
        term_budget (int): maximum number of monic polynomials summed by brute force
    """

    def __init__(self, ring: PolyRing, term_budget: int = DEFAULT_TERM_BUDGET):
        self.ring = ring
        self.q = ring.field.size
        self.term_budget = term_budget
        self.sequences = get_sequences(ring)
        self.carlitz = CarlitzModule(ring)
        self._bernoulli: Dict[int, Poly] = {0: ring.one}

    def _check_budget(self, j: int):
        if self.q ** j > self.term_budget:
            raise BudgetExceeded(f"q^{j} = {self.q ** j} monic polynomials exceed the term budget",
                                 budget=self.term_budget)

    def power_sum_bruteforce(self, j: int, i: int) -> RationalFunction:
        """
        Sum of a^i over the monic a of degree j.

        Args:
            j (int): degree
            i (int): exponent, any sign

        Returns:
            RationalFunction: the exact reduced sum
        """
        self._check_budget(j)
        ring = self.ring
        if i >= 0:
            total = ring.zero
            for a in ring.monic_polys(j):
                total = total + a ** i
            return RationalFunction(total)
        total = RationalFunction.zero(ring)
        for a in ring.monic_polys(j):
            total = total + RationalFunction(ring.one, a ** (-i))
        return total

    def power_sum(self, j: int, i: int) -> RationalFunction:
        """S_j(i) by closed form when one applies, else by brute force."""
        ring = self.ring
        if j == 0:
            return RationalFunction.one(ring)
        if 0 <= i <= self.q ** j - 2:
            return RationalFunction.zero(ring)
        if -(self.q - 1) <= i <= -1:
            return RationalFunction(ring.one, self.sequences.L(j) ** (-i))
        return self.power_sum_bruteforce(j, i)

    def _layers(self, i: int):
        """(j, weight) pairs entering B(i); S_j(i) vanishes once i <= q^j - 2."""
        weighted = i > 0 and i % (self.q - 1) == 0
        j = 0
        while j == 0 or self.q ** j - 2 < i:
            yield j, (self.ring.field.from_int(j) if weighted else 1)
            j += 1

    def bernoulli_goss(self, i: int) -> Poly:
        """
        B(i) = sum_j S_j(i), or sum_j j S_j(i) when (q - 1) | i > 0.

        Args:
            i (int): non-negative index

        Returns:
            Poly: B(i), always a polynomial
        """
        if i < 0:
            raise ValueError(f"Bernoulli-Goss index must be non-negative, got {i}")
        if i in self._bernoulli:
            return self._bernoulli[i]
        total = RationalFunction.zero(self.ring)
        for j, weight in self._layers(i):
            if weight:
                total = total + self.power_sum(j, i) * self.ring.constant(weight)
        if not total.is_polynomial():
            raise NonIntegralResult(f"B({i}) came out as {total!r}", i=i)
        self._bernoulli[i] = total.numerator
        logger.debug(f"B({i}) has degree {total.numerator.degree}")
        return total.numerator

    def bernoulli_goss_mod(self, i: int, modulus: Poly) -> Poly:
        """B(i) mod ``modulus`` by modular powering of every monic a."""
        if i < 0:
            raise ValueError(f"Bernoulli-Goss index must be non-negative, got {i}")
        ring = self.ring
        if i == 0:
            return ring.one % modulus
        total = ring.zero
        for j, weight in self._layers(i):
            if not weight:
                continue
            self._check_budget(j)
            layer = ring.zero
            for a in ring.monic_polys(j):
                layer = layer + a.powmod(i, modulus)
            total = total + layer * ring.constant(weight)
        return total % modulus

    def lemma1_check(self, prime: Poly, c: int) -> bool:
        """
        B(q^d - c) = sum_(k<d) 1/L_k^(c-1) mod P for c in {2, ..., q-1}.

        Args:
            prime (Poly): prime P of degree d
            c (int): the shift

        Returns:
            bool: whether the congruence holds
        """
        require_prime(prime)
        if not 2 <= c <= self.q - 1:
            raise COutOfRange(f"c = {c} is outside {{2, ..., {self.q - 1}}}", c=c, q=self.q)
        d = prime.degree
        left = self.bernoulli_goss(self.q ** d - c) % prime
        right = self.ring.zero
        for k in range(d):
            right = right + (self.sequences.L(k) ** (c - 1)).invmod(prime)
        return left == right % prime

    def corollary1_check(self, prime: Poly) -> bool:
        """phi_(P-1)(1) = P B(q^d - 2) mod P^2, both sides computed separately."""
        require_prime(prime)
        d = prime.degree
        square = prime * prime
        left = self.carlitz.phi_apply(prime - 1, self.ring.one, QuotientAlgebra(self.ring, square))
        right = (prime * self.bernoulli_goss(self.q ** d - 2)) % square
        return left == right

    def vanishing_check(self, k: int) -> bool:
        """Brute-force S_k(i) = 0 on 0 <= i <= q^k - 2."""
        return all(self.power_sum_bruteforce(k, i).is_zero() for i in range(self.q ** k - 1))

    def negative_closed_form_check(self, k: int, c: Optional[int] = None) -> bool:
        """Brute-force S_k(-c) = 1/L_k^c for one c, or every c in {1, ..., q-1}."""
        shifts = [c] if c is not None else range(1, self.q)
        target = self.sequences.L(k)
        return all(self.power_sum_bruteforce(k, -s) == RationalFunction(self.ring.one, target ** s)
                   for s in shifts)
