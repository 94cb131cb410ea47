"""
A-algebras in which the Carlitz action can be evaluated.

Each handle knows how to recognise its elements, add them, multiply them by an
element of A, and raise them to the q-th power.
"""

from arithmetic.field_tower import FieldDescriptor, get_embedding
from arithmetic.laurent_series import LaurentSeries
from arithmetic.padic_element import PadicElement
from arithmetic.poly_ring import Poly, PolyRing
from utils.errors import AlgebraMismatch


class Algebra:
    """Interface shared by the algebra handles."""

    name = "algebra"

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise AlgebraMismatch(f"{x!r} is not an element of {self.name}")
        return x

    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        return x + y

    def scale(self, a: Poly, x):
        raise NotImplementedError

    def frobenius_q(self, x):
        raise NotImplementedError

    def equal(self, x, y) -> bool:
        return x == y


class PolynomialAlgebra(Algebra):
    """A itself."""

    name = "A"

    def contains(self, x) -> bool:
        return isinstance(x, Poly) and x.ring == self.ring

    def zero(self):
        return self.ring.zero

    def scale(self, a: Poly, x: Poly) -> Poly:
        return a * x

    def frobenius_q(self, x: Poly) -> Poly:
        return x.frobenius_power(self.ring.field.e)


class QuotientAlgebra(Algebra):
    """A/M with reduced representatives."""

    def __init__(self, ring: PolyRing, modulus: Poly):
        super().__init__(ring)
        if modulus.ring != ring or modulus.degree < 1:
            raise AlgebraMismatch(f"{modulus!r} is not a non-constant modulus in {ring!r}")
        self.modulus = modulus
        self.name = f"A/({modulus!r})"

    def contains(self, x) -> bool:
        return isinstance(x, Poly) and x.ring == self.ring and x.degree < self.modulus.degree

    def reduce(self, x: Poly) -> Poly:
        return x % self.modulus

    def zero(self):
        return self.ring.zero

    def add(self, x: Poly, y: Poly) -> Poly:
        return x + y

    def scale(self, a: Poly, x: Poly) -> Poly:
        return (a * x) % self.modulus

    def frobenius_q(self, x: Poly) -> Poly:
        ring = self.ring
        return Poly(ring, ring.frobenius_mod(x.coeffs, ring.field.e, self.modulus.coeffs))


class LaurentAlgebra(Algebra):
    """F_(q^N)((1/T)) containing the image of A."""

    def __init__(self, ring: PolyRing, field: FieldDescriptor = None):
        super().__init__(ring)
        self.field = field or ring.field
        self.embedding = get_embedding(ring.field, self.field)
        self.name = f"{self.field!r}((1/T))"

    def contains(self, x) -> bool:
        return isinstance(x, LaurentSeries) and x.field == self.field

    def zero(self, prec: int = 0):
        return LaurentSeries.zero(self.field, prec)

    def scale(self, a: Poly, x: LaurentSeries) -> LaurentSeries:
        if a.is_zero():
            return LaurentSeries.zero(self.field, x.abs_prec)
        lifted = self.ring.map_coeffs(a.coeffs, self.embedding.lift)
        series = LaurentSeries(self.field, -a.degree, list(reversed(lifted)), x.abs_prec - x.lead_exp)
        return series * x

    def frobenius_q(self, x: LaurentSeries) -> LaurentSeries:
        return x.frobenius_power(self.ring.field.e)


class PadicAlgebra(Algebra):
    """A/P^n seen as truncated P-adic integers."""

    def __init__(self, ring: PolyRing, prime: Poly, n: int):
        super().__init__(ring)
        self.prime = prime
        self.n = n
        self.name = f"A_P mod P^{n}"

    def contains(self, x) -> bool:
        return isinstance(x, PadicElement) and x.prime == self.prime

    def element(self, x: Poly) -> PadicElement:
        return PadicElement(self.prime, self.n, x)

    def zero(self):
        return PadicElement(self.prime, self.n, self.ring.zero)

    def scale(self, a: Poly, x: PadicElement) -> PadicElement:
        return x * a

    def frobenius_q(self, x: PadicElement) -> PadicElement:
        return PadicElement(self.prime, x.n, x.residue.frobenius_power(self.ring.field.e))
