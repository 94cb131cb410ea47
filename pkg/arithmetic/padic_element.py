"""
Truncated P-adic integers: residues in A/P^n with their P-adic valuation.
"""

from functools import lru_cache
from typing import Dict, Union

from .poly_ring import Poly
from utils.errors import FieldMismatch, NotInDomain


@lru_cache(maxsize=256)
def prime_power(prime: Poly, n: int) -> Poly:
    return prime ** n


class PadicElement:
    """
    An element of A_P known modulo P^n.

    ``val`` is the exact valuation when below n; ``val == n`` stands for "at least n".

    Args:
        prime (Poly): the prime P
        n (int): working precision exponent
        residue (Poly): any representative; reduced modulo P^n on construction
    """

    __slots__ = ("prime", "n", "residue", "val")

    def __init__(self, prime: Poly, n: int, residue: Poly):
        if n < 1:
            raise ValueError(f"P-adic precision must be at least 1, got {n}")
        if residue.ring != prime.ring:
            raise FieldMismatch("residue and prime live in different rings")
        self.prime = prime
        self.n = n
        self.residue = residue % prime_power(prime, n)
        self.val = self.residue.valuation(prime, cap=n)

    @property
    def modulus(self) -> Poly:
        return prime_power(self.prime, self.n)

    def is_zero(self) -> bool:
        return self.val >= self.n

    def is_unit(self) -> bool:
        return self.val == 0

    def valuation_text(self) -> Union[int, str]:
        return self.val if self.val < self.n else f">={self.n}"

    def _check(self, other: "PadicElement"):
        if not isinstance(other, PadicElement):
            raise TypeError(f"cannot combine a P-adic element with {type(other).__name__}")
        if other.prime != self.prime:
            raise FieldMismatch("P-adic elements for different primes do not mix")

    def with_precision(self, n: int) -> "PadicElement":
        """Truncate to a precision no larger than the current one."""
        return PadicElement(self.prime, min(n, self.n), self.residue)

    def __add__(self, other: "PadicElement") -> "PadicElement":
        self._check(other)
        return PadicElement(self.prime, min(self.n, other.n), self.residue + other.residue)

    def __sub__(self, other: "PadicElement") -> "PadicElement":
        self._check(other)
        return PadicElement(self.prime, min(self.n, other.n), self.residue - other.residue)

    def __neg__(self) -> "PadicElement":
        return PadicElement(self.prime, self.n, -self.residue)

    def __mul__(self, other) -> "PadicElement":
        if isinstance(other, (Poly, int)):
            return PadicElement(self.prime, self.n, self.residue * other)
        self._check(other)
        return PadicElement(self.prime, min(self.n, other.n), self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PadicElement":
        return PadicElement(self.prime, self.n, self.residue.powmod(k, self.modulus))

    def inverse(self) -> "PadicElement":
        if not self.is_unit():
            raise NotInDomain(f"only P-adic units are invertible, valuation is {self.valuation_text()}")
        return PadicElement(self.prime, self.n, self.residue.invmod(self.modulus))

    def divide_by_prime(self, k: int = 1) -> "PadicElement":
        """x / P^k for val >= k; the result is known modulo P^(n-k)."""
        if k > self.val or k >= self.n:
            raise NotInDomain(f"cannot divide an element of valuation {self.valuation_text()} by P^{k}")
        quotient = self.residue.exact_div(prime_power(self.prime, k))
        return PadicElement(self.prime, self.n - k, quotient)

    def agrees_with(self, other: "PadicElement") -> bool:
        self._check(other)
        n = min(self.n, other.n)
        return (self.residue - other.residue) % prime_power(self.prime, n) == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PadicElement):
            return NotImplemented
        return self.prime == other.prime and self.n == other.n and self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.prime, self.n, self.residue))

    def to_json(self) -> Dict:
        return {
            "P": repr(self.prime),
            "n": self.n,
            "residue": repr(self.residue),
            "val": self.valuation_text()
        }

    def __repr__(self) -> str:
        return f"{self.residue!r} + O(P^{self.n})"
