"""
The Carlitz module phi: A -> End(G_a), phi_T(X) = T X + X^q.

Coefficients [a,k] = Psi_k(a) of phi_a come from the exact recurrence
Psi_(k+1) = (Psi_k^q - Psi_k) / (T^(q^(k+1)) - T) starting at Psi_0(a) = a.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from loguru import logger

from arithmetic.factorization import is_irreducible
from arithmetic.poly_ring import Poly, PolyRing
from arithmetic.rational_function import RationalFunction
from utils.errors import BudgetExceeded, NotPrime
from .algebras import Algebra, PolynomialAlgebra
from .basic_sequences import BasicSequences, get_sequences


@dataclass(frozen=True)
class CarlitzCoeffs:
    """phi_a(X) = sum_k coeffs[k] X^(q^k)."""

    a: Poly
    coeffs: Tuple[Poly, ...]

    def __getitem__(self, k: int) -> Poly:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> Dict:
        return {"a": repr(self.a), "coeffs": [repr(c) for c in self.coeffs]}


def require_prime(prime: Poly):
    """Raise NotPrime unless ``prime`` is monic irreducible."""
    if prime.degree < 1 or not prime.is_monic() or not is_irreducible(prime):
        raise NotPrime(f"{prime!r} is not a monic irreducible polynomial")


@lru_cache(maxsize=4096)
def _phi_coeffs(a: Poly) -> CarlitzCoeffs:
    ring = a.ring
    e = ring.field.e
    q = ring.field.size
    coeffs = [a]
    psi = a
    for k in range(max(a.degree, 0)):
        step = ring.monomial(q ** (k + 1)) - ring.T
        psi = (psi.frobenius_power(e) - psi).exact_div(step)
        coeffs.append(psi)
    return CarlitzCoeffs(a, tuple(coeffs))


class CarlitzModule:
    """
    Evaluation of the Carlitz action and the coefficient identities behind it.

    Args:
        ring (PolyRing): A = F_q[T]
    """

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.q = ring.field.size
        self.sequences: BasicSequences = get_sequences(ring)
        self.polynomials = PolynomialAlgebra(ring)

    def phi_coeffs(self, a: Poly) -> CarlitzCoeffs:
        """
        Coefficients [a,0], ..., [a,deg a] of phi_a.

        Args:
            a (Poly): element of A

        Returns:
            CarlitzCoeffs: [a,0] = a and [a,deg a] = leading coefficient of a
        """
        return _phi_coeffs(a)

    def phi_apply(self, a: Poly, x, algebra: Algebra = None):
        """
        phi_a(x) = sum_k [a,k] x^(q^k) in the given algebra.

        Args:
            a (Poly): element of A
            x: element of ``algebra``
            algebra (Algebra): defaults to A itself

        Returns:
            the value in the same algebra
        """
        algebra = algebra or self.polynomials
        algebra.check(x)
        coeffs = self.phi_coeffs(a)
        power = x
        value = algebra.scale(coeffs[0], power)
        for c in coeffs.coeffs[1:]:
            power = algebra.frobenius_q(power)
            value = algebra.add(value, algebra.scale(c, power))
        return value

    def phi_T(self, x, algebra: Algebra = None):
        algebra = algebra or self.polynomials
        return algebra.add(algebra.scale(self.ring.T, x), algebra.frobenius_q(x))

    def phi_apply_digits(self, a: Poly, x, algebra: Algebra = None):
        """Horner evaluation along the T-digits of a using phi_T only."""
        algebra = algebra or self.polynomials
        algebra.check(x)
        value = algebra.scale(self.ring.zero, x)
        for c in reversed(a.coeffs):
            value = algebra.add(self.phi_T(value, algebra), algebra.scale(self.ring.constant(c), x))
        return value

    # --- coefficient identities ---------------------------------------------

    def psi_closed_form(self, k: int, x: Poly) -> RationalFunction:
        """Psi_k(x) = sum_i x^(q^i) / (D_i L_(k-i)^(q^i))."""
        ring, e = self.ring, self.ring.field.e
        total = RationalFunction.zero(ring)
        power = x
        for i in range(k + 1):
            if i:
                power = power.frobenius_power(e)
            denominator = self.sequences.D(i) * self.sequences.L(k - i).frobenius_power(e * i)
            total = total + RationalFunction(power, denominator)
        return total

    def psi_derivative_check(self, k: int, term_budget: int = 10 ** 5) -> bool:
        """
        The X-linear coefficient of Psi_k is 1/L_k, read off the product
        Psi_k(X) = (1/D_k) prod_(deg a < k) (X - a).
        """
        if self.q ** k > term_budget:
            raise BudgetExceeded(f"q^k = {self.q ** k} exceeds the term budget", budget=term_budget)
        product = self.ring.one
        for a in self.ring.polys_below(k):
            if not a.is_zero():
                product = product * (-a)
        return RationalFunction(product, self.sequences.D(k)) == RationalFunction(self.ring.one, self.sequences.L(k))

    def product_formula_check(self, k: int, samples: Iterable[Poly]) -> bool:
        """D_k Psi_k(x) = prod_(deg a < k) (x - a) at each sample point."""
        below = list(self.ring.polys_below(k))
        for x in samples:
            psi = self.phi_coeffs(x)[k] if x.degree >= k else self.ring.zero
            product = self.ring.one
            for a in below:
                product = product * (x - a)
            if self.sequences.D(k) * psi != product:
                logger.debug(f"Product formula fails for k = {k} at x = {x!r}")
                return False
        return True

    def multiplicativity_check(self, a: Poly, b: Poly) -> bool:
        """Psi_k(ab) = sum_i Psi_i(a) Psi_(k-i)(b)^(q^i) for every k."""
        e = self.ring.field.e
        pa, pb, pab = self.phi_coeffs(a), self.phi_coeffs(b), self.phi_coeffs(a * b)

        def psi(c: CarlitzCoeffs, k: int) -> Poly:
            return c[k] if k < len(c) else self.ring.zero

        for k in range(len(pab)):
            total = self.ring.zero
            for i in range(k + 1):
                total = total + psi(pa, i) * psi(pb, k - i).frobenius_power(e * i)
            if total != pab[k]:
                return False
        return True

    def lemma3_report(self, prime: Poly) -> Dict:
        """
        Check [P,0] = P, [P,d] = 1, P | [P,k] and ([P,k]/P) L_k = 1 mod P for k < d.

        Args:
            prime (Poly): monic irreducible P of degree d

        Returns:
            Dict: per-k rows and the overall verdict
        """
        require_prime(prime)
        d = prime.degree
        coeffs = self.phi_coeffs(prime)
        rows: List[Dict] = []
        for k in range(d):
            quotient, remainder = divmod(coeffs[k], prime)
            divisible = remainder.is_zero()
            congruence = divisible and (quotient * self.sequences.L(k)) % prime == self.ring.one
            rows.append({"k": k, "divisible": divisible, "congruence": congruence,
                         "pass": divisible and congruence})
        ends = coeffs[0] == prime and coeffs[d] == self.ring.one
        return {
            "P": repr(prime),
            "d": d,
            "endpoints": ends,
            "rows": rows,
            "pass": ends and all(row["pass"] for row in rows)
        }