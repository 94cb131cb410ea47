"""
Exact elements of k = F_q(T) as reduced fractions.
"""

from .poly_ring import Poly, PolyRing
from utils.errors import DivideByZeroPoly, FieldMismatch


class RationalFunction:
    """
    numerator / denominator with gcd 1 and a monic denominator.

    Args:
        numerator (Poly): numerator
        denominator (Poly): nonzero denominator (defaults to 1)
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Poly, denominator: Poly = None):
        ring = numerator.ring
        if denominator is None:
            denominator = ring.one
        if denominator.ring != ring:
            raise FieldMismatch(f"numerator over {ring!r}, denominator over {denominator.ring!r}")
        if denominator.is_zero():
            raise DivideByZeroPoly("rational function with zero denominator")
        g = numerator.gcd(denominator)
        if g.degree > 0:
            numerator, denominator = numerator // g, denominator // g
        lead = denominator.leading
        if lead != 1:
            inv = ring.field.inv(lead)
            numerator = Poly(ring, ring.scale(numerator.coeffs, inv))
            denominator = Poly(ring, ring.scale(denominator.coeffs, inv))
        if numerator.is_zero():
            denominator = ring.one
        self.numerator = numerator
        self.denominator = denominator

    @property
    def ring(self) -> PolyRing:
        return self.numerator.ring

    @classmethod
    def zero(cls, ring: PolyRing) -> "RationalFunction":
        return cls(ring.zero)

    @classmethod
    def one(cls, ring: PolyRing) -> "RationalFunction":
        return cls(ring.one)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.numerator

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction(self.ring.one * other)
        raise TypeError(f"cannot combine a rational function with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(self.numerator * other.denominator + other.numerator * self.denominator,
                                self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivideByZeroPoly("inverse of the zero rational function")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.numerator ** k, self.denominator ** k)

    def reduce_mod(self, modulus: Poly) -> Poly:
        """Image in A/modulus; the denominator must be invertible there."""
        inv = self.denominator.invmod(modulus)
        return (self.numerator * inv) % modulus

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.numerator)
        return f"({self.numerator!r}) / ({self.denominator!r})"
