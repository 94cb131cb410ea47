"""
The polynomial rings A = F_q[T] and F_{q^n}[T].

Polynomials are dense ascending tuples of field codes with no trailing zeros;
the zero polynomial is the empty tuple.  :class:`PolyRing` implements the
arithmetic on those tuples and :class:`Poly` is the immutable public value.
"""

import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .field_tower import FieldDescriptor, FieldElement
from utils.errors import DivideByZeroPoly, FieldMismatch, InexactDivision

Coeffs = Tuple[int, ...]

# prime-field products switch to numpy.convolve above this length
CONVOLVE_THRESHOLD = 32


class PolyRing:
    """
    Dense univariate polynomials over a described field.

    Args:
        field (FieldDescriptor): coefficient field
        var (str): name of the indeterminate used when printing
    """

    def __init__(self, field: FieldDescriptor, var: str = "T"):
        self.field = field
        self.var = var

    # --- construction ------------------------------------------------------

    @staticmethod
    def strip(coeffs: Sequence[int]) -> Coeffs:
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        return tuple(coeffs[:end])

    def poly(self, coeffs: Sequence[int]) -> "Poly":
        return Poly(self, self.strip(list(coeffs)))

    def from_ints(self, coeffs: Sequence[int]) -> "Poly":
        """Polynomial with prime-subfield coefficients given as integers."""
        return self.poly([self.field.from_int(c) for c in coeffs])

    def constant(self, code: int) -> "Poly":
        return self.poly([code])

    def monomial(self, k: int, code: int = 1) -> "Poly":
        return self.poly([0] * k + [code])

    @property
    def zero(self) -> "Poly":
        return Poly(self, ())

    @property
    def one(self) -> "Poly":
        return Poly(self, (1,))

    @property
    def T(self) -> "Poly":
        return Poly(self, (0, 1))

    @property
    def q(self) -> int:
        return self.field.size

    def monic_polys(self, d: int) -> Iterator["Poly"]:
        """Monic polynomials of degree d in lexicographic order."""
        for tail in itertools.product(self.field.elements_lex(), repeat=d):
            yield Poly(self, tail + (1,))

    def polys_below(self, d: int) -> Iterator["Poly"]:
        """All polynomials of degree < d (including zero), lexicographic in the coefficient tuple."""
        for coeffs in itertools.product(self.field.elements_lex(), repeat=d):
            yield Poly(self, self.strip(coeffs))

    def random_poly(self, rng: random.Random, degree: int, monic: bool = False) -> "Poly":
        coeffs = [rng.randrange(self.field.size) for _ in range(degree)]
        lead = 1 if monic else rng.randrange(1, self.field.size)
        return Poly(self, self.strip(coeffs + [lead]))

    def sort_key(self, f: "Poly"):
        return (f.degree, tuple(self.field.lex_key(c) for c in f.coeffs))

    # --- tuple arithmetic --------------------------------------------------

    def add(self, f: Coeffs, g: Coeffs) -> Coeffs:
        if len(f) < len(g):
            f, g = g, f
        add = self.field.add
        out = list(f)
        for i, c in enumerate(g):
            out[i] = add(out[i], c)
        return self.strip(out)

    def neg(self, f: Coeffs) -> Coeffs:
        neg = self.field.neg
        return tuple(neg(c) for c in f)

    def sub(self, f: Coeffs, g: Coeffs) -> Coeffs:
        return self.add(f, self.neg(g))

    def scale(self, f: Coeffs, c: int) -> Coeffs:
        if c == 0:
            return ()
        mul = self.field.mul
        return tuple(mul(c, a) for a in f)

    def shift(self, f: Coeffs, k: int) -> Coeffs:
        return (0,) * k + f if f else ()

    def mul(self, f: Coeffs, g: Coeffs) -> Coeffs:
        if not f or not g:
            return ()
        field = self.field
        if field.e == 1:
            p = field.p
            if min(len(f), len(g)) > CONVOLVE_THRESHOLD:
                prod = np.convolve(np.array(f, dtype=np.int64), np.array(g, dtype=np.int64)) % p
                return self.strip(prod.tolist())
            out = [0] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                if a:
                    for j, b in enumerate(g):
                        out[i + j] += a * b
            return self.strip([c % p for c in out])
        add, mul = field.add, field.mul
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] = add(out[i + j], mul(a, b))
        return self.strip(out)

    def divmod(self, f: Coeffs, g: Coeffs) -> Tuple[Coeffs, Coeffs]:
        if not g:
            raise DivideByZeroPoly("division by the zero polynomial")
        dg = len(g) - 1
        if len(f) <= dg:
            return (), f
        field = self.field
        inv = field.inv(g[-1])
        out = list(f)
        quot = [0] * (len(f) - dg)
        if field.e == 1:
            p = field.p
            for k in range(len(f) - 1 - dg, -1, -1):
                c = out[k + dg] % p
                if c:
                    c = c * inv % p
                    quot[k] = c
                    for i in range(dg):
                        out[k + i] -= c * g[i]
                out[k + dg] = 0
            return self.strip(quot), self.strip([c % p for c in out[:dg]])
        add, mul, neg = field.add, field.mul, field.neg
        for k in range(len(f) - 1 - dg, -1, -1):
            c = out[k + dg]
            if c:
                c = mul(c, inv)
                quot[k] = c
                nc = neg(c)
                for i in range(dg):
                    if g[i]:
                        out[k + i] = add(out[k + i], mul(nc, g[i]))
            out[k + dg] = 0
        return self.strip(quot), self.strip(out[:dg])

    def rem(self, f: Coeffs, g: Coeffs) -> Coeffs:
        return self.divmod(f, g)[1]

    def exact_div(self, f: Coeffs, g: Coeffs) -> Coeffs:
        quot, rem = self.divmod(f, g)
        if rem:
            raise InexactDivision("non-zero remainder in an exact division")
        return quot

    def monic(self, f: Coeffs) -> Coeffs:
        if not f or f[-1] == 1:
            return f
        return self.scale(f, self.field.inv(f[-1]))

    def gcd(self, f: Coeffs, g: Coeffs) -> Coeffs:
        while g:
            f, g = g, self.rem(f, g)
        return self.monic(f)

    def gcdex(self, f: Coeffs, g: Coeffs) -> Tuple[Coeffs, Coeffs, Coeffs]:
        """(s, t, h) with s*f + t*g = h = gcd(f, g) monic."""
        r0, r1 = f, g
        s0, s1 = (1,), ()
        t0, t1 = (), (1,)
        while r1:
            quot, rem = self.divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self.sub(s0, self.mul(quot, s1))
            t0, t1 = t1, self.sub(t0, self.mul(quot, t1))
        if not r0:
            return (), (), ()
        inv = self.field.inv(r0[-1])
        return self.scale(s0, inv), self.scale(t0, inv), self.scale(r0, inv)

    def invmod(self, f: Coeffs, m: Coeffs) -> Coeffs:
        s, _, h = self.gcdex(self.rem(f, m), m)
        if h != (1,):
            raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
        return self.rem(s, m)

    def pow(self, f: Coeffs, k: int) -> Coeffs:
        if k < 0:
            raise ValueError("negative exponent of a polynomial")
        result: Coeffs = (1,)
        while k:
            if k & 1:
                result = self.mul(result, f)
            k >>= 1
            if k:
                f = self.mul(f, f)
        return result

    def powmod(self, f: Coeffs, k: int, m: Coeffs) -> Coeffs:
        if k < 0:
            return self.powmod(self.invmod(f, m), -k, m)
        result = self.rem((1,), m)
        f = self.rem(f, m)
        while k:
            if k & 1:
                result = self.rem(self.mul(result, f), m)
            k >>= 1
            if k:
                f = self.rem(self.mul(f, f), m)
        return result

    def frobenius_power(self, f: Coeffs, t: int) -> Coeffs:
        """f^(p^t), computed coefficient-wise since the characteristic is p."""
        if not f:
            return ()
        step = self.field.p ** t
        frob = self.field.frobenius
        out = [0] * ((len(f) - 1) * step + 1)
        for i, c in enumerate(f):
            out[i * step] = frob(c, t)
        return tuple(out)

    def frobenius_mod(self, f: Coeffs, t: int, m: Coeffs) -> Coeffs:
        return self.rem(self.frobenius_power(f, t), m)

    def derivative(self, f: Coeffs) -> Coeffs:
        field = self.field
        return self.strip([field.mul(field.from_int(i), c) for i, c in enumerate(f)][1:])

    def evaluate(self, f: Coeffs, x: int) -> int:
        add, mul = self.field.add, self.field.mul
        value = 0
        for c in reversed(f):
            value = add(mul(value, x), c)
        return value

    def map_coeffs(self, f: Coeffs, fn) -> Coeffs:
        return self.strip([fn(c) for c in f])

    def valuation(self, f: Coeffs, p: Coeffs, cap: Optional[int] = None) -> int:
        """Exponent of p in f (``cap`` when f is zero or the count reaches it)."""
        if not f:
            if cap is None:
                raise ValueError("valuation of zero needs a cap")
            return cap
        v = 0
        while cap is None or v < cap:
            quot, rem = self.divmod(f, p)
            if rem:
                break
            f, v = quot, v + 1
        return v

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.field == other.field and self.var == other.var

    def __hash__(self) -> int:
        return hash((self.field, self.var))

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.var}]"


class Poly:
    """Immutable polynomial over the coefficient field of ``ring``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: Coeffs):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def coefficients(self) -> List[FieldElement]:
        return [self.ring.field.element(c) for c in self.coeffs]

    def _coerce(self, other) -> Coeffs:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise FieldMismatch(f"cannot combine {self.ring!r} with {other.ring!r}")
            return other.coeffs
        if isinstance(other, int):
            return self.ring.strip([self.ring.field.from_int(other)])
        if isinstance(other, FieldElement):
            if other.descriptor != self.ring.field:
                raise FieldMismatch(f"{other.descriptor!r} is not the coefficient field of {self.ring!r}")
            return self.ring.strip([other.code])
        raise TypeError(f"cannot combine a polynomial with {type(other).__name__}")

    def _wrap(self, coeffs: Coeffs) -> "Poly":
        return Poly(self.ring, coeffs)

    def __add__(self, other):
        return self._wrap(self.ring.add(self.coeffs, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.ring.sub(self.coeffs, self._coerce(other)))

    def __rsub__(self, other):
        return self._wrap(self.ring.sub(self._coerce(other), self.coeffs))

    def __neg__(self):
        return self._wrap(self.ring.neg(self.coeffs))

    def __mul__(self, other):
        return self._wrap(self.ring.mul(self.coeffs, self._coerce(other)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        quot, rem = self.ring.divmod(self.coeffs, self._coerce(other))
        return self._wrap(quot), self._wrap(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return self._wrap(self.ring.rem(self.coeffs, self._coerce(other)))

    def __pow__(self, k: int):
        return self._wrap(self.ring.pow(self.coeffs, k))

    def exact_div(self, other) -> "Poly":
        return self._wrap(self.ring.exact_div(self.coeffs, self._coerce(other)))

    def divides(self, other: "Poly") -> bool:
        return not self.ring.rem(self._coerce(other), self.coeffs)

    def powmod(self, k: int, modulus: "Poly") -> "Poly":
        return self._wrap(self.ring.powmod(self.coeffs, k, self._coerce(modulus)))

    def invmod(self, modulus: "Poly") -> "Poly":
        return self._wrap(self.ring.invmod(self.coeffs, self._coerce(modulus)))

    def frobenius_power(self, t: int) -> "Poly":
        return self._wrap(self.ring.frobenius_power(self.coeffs, t))

    def monic(self) -> "Poly":
        return self._wrap(self.ring.monic(self.coeffs))

    def derivative(self) -> "Poly":
        return self._wrap(self.ring.derivative(self.coeffs))

    def gcd(self, other) -> "Poly":
        return self._wrap(self.ring.gcd(self.coeffs, self._coerce(other)))

    def valuation(self, prime: "Poly", cap: Optional[int] = None) -> int:
        return self.ring.valuation(self.coeffs, self._coerce(prime), cap)

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.ring.field.element(self.ring.evaluate(self.coeffs, x.code))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        from .poly_format import format_poly
        return format_poly(self)
