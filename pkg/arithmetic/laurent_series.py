"""
Truncated Laurent series in 1/T.

A series is ``sum_j c_j T^(-j)`` with every coefficient for ``j < abs_prec`` known
exactly.  ``lead_exp`` is the first stored exponent; after normalization it is
the valuation v_inf of a nonzero series (v_inf(T) = -1), and ``abs_prec`` itself
for a series that is zero to the known precision.
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from .field_tower import FieldDescriptor, FieldEmbedding, get_embedding
from .poly_ring import Poly
from .rational_function import RationalFunction
from utils.errors import DivideByZeroPoly, FieldMismatch


class LaurentSeries:
    """
    Element of F((1/T)) known modulo T^(-abs_prec).

    Args:
        field (FieldDescriptor): coefficient field
        lead_exp (int): exponent of the first stored coefficient
        coeffs (Sequence[int]): codes of c_lead_exp, c_lead_exp+1, ...
        abs_prec (int): absolute precision N
    """

    __slots__ = ("field", "lead_exp", "coeffs", "abs_prec")

    def __init__(self, field: FieldDescriptor, lead_exp: int, coeffs: Sequence[int], abs_prec: int):
        coeffs = list(coeffs[:max(abs_prec - lead_exp, 0)])
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        lead_exp += start
        coeffs = coeffs[start:]
        if not coeffs:
            lead_exp = abs_prec
        coeffs += [0] * (abs_prec - lead_exp - len(coeffs))
        self.field = field
        self.lead_exp = lead_exp
        self.coeffs = tuple(coeffs)
        self.abs_prec = abs_prec

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldDescriptor, prec: int) -> "LaurentSeries":
        return cls(field, prec, (), prec)

    @classmethod
    def constant(cls, field: FieldDescriptor, code: int, prec: int) -> "LaurentSeries":
        return cls(field, 0, [code], prec)

    @classmethod
    def monomial(cls, field: FieldDescriptor, j: int, prec: int, code: int = 1) -> "LaurentSeries":
        """code * T^(-j)."""
        return cls(field, j, [code], prec)

    @classmethod
    def from_poly(cls, f: Poly, prec: int) -> "LaurentSeries":
        if f.is_zero():
            return cls.zero(f.ring.field, prec)
        return cls(f.ring.field, -f.degree, list(reversed(f.coeffs)), prec)

    @classmethod
    def reciprocal_poly(cls, f: Poly, prec: int) -> "LaurentSeries":
        """1/f expanded at infinity to absolute precision ``prec``."""
        if f.is_zero():
            raise DivideByZeroPoly("reciprocal of the zero polynomial")
        working = max(prec - 2 * f.degree, -f.degree + 1)
        return cls.from_poly(f, working).inverse().truncate(prec)

    @classmethod
    def from_rational(cls, r: RationalFunction, prec: int) -> "LaurentSeries":
        num = cls.from_poly(r.numerator, prec + r.denominator.degree + max(r.numerator.degree, 0))
        return (num * cls.reciprocal_poly(r.denominator, prec + r.numerator.degree + 1)).truncate(prec)

    # --- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs or self.lead_exp >= self.abs_prec

    @property
    def valuation(self) -> int:
        """v_inf of the series; abs_prec when it is zero to the known precision."""
        return self.lead_exp

    def coefficient(self, j: int) -> int:
        if j >= self.abs_prec:
            raise ValueError(f"coefficient of T^-{j} is beyond the precision {self.abs_prec}")
        if j < self.lead_exp:
            return 0
        return self.coeffs[j - self.lead_exp]

    def _dense(self, start: int, stop: int) -> List[int]:
        """Coefficients for exponents start..stop-1 (zeros outside the stored range)."""
        out = [0] * max(stop - start, 0)
        for j in range(max(start, self.lead_exp), min(stop, self.lead_exp + len(self.coeffs))):
            out[j - start] = self.coeffs[j - self.lead_exp]
        return out

    def _check(self, other: "LaurentSeries"):
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"cannot combine a Laurent series with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"series over {self.field!r} and {other.field!r} do not mix")

    # --- arithmetic --------------------------------------------------------

    def truncate(self, prec: int) -> "LaurentSeries":
        prec = min(prec, self.abs_prec)
        return LaurentSeries(self.field, self.lead_exp, self.coeffs, prec)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        prec = min(self.abs_prec, other.abs_prec)
        start = min(self.lead_exp, other.lead_exp, prec)
        add = self.field.add
        a, b = self._dense(start, prec), other._dense(start, prec)
        return LaurentSeries(self.field, start, [add(x, y) for x, y in zip(a, b)], prec)

    def __neg__(self) -> "LaurentSeries":
        neg = self.field.neg
        return LaurentSeries(self.field, self.lead_exp, [neg(c) for c in self.coeffs], self.abs_prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, code: int) -> "LaurentSeries":
        mul = self.field.mul
        return LaurentSeries(self.field, self.lead_exp, [mul(code, c) for c in self.coeffs], self.abs_prec)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by T^k."""
        return LaurentSeries(self.field, self.lead_exp - k, self.coeffs, self.abs_prec - k)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        v1, v2 = self.lead_exp, other.lead_exp
        prec = min(self.abs_prec + v2, other.abs_prec + v1)
        lead = v1 + v2
        if lead >= prec:
            return LaurentSeries.zero(self.field, prec)
        length = prec - lead
        a, b = list(self.coeffs[:length]), list(other.coeffs[:length])
        return LaurentSeries(self.field, lead, _convolve(self.field, a, b)[:length], prec)

    def __pow__(self, k: int) -> "LaurentSeries":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return LaurentSeries.constant(self.field, 1, max(self.abs_prec, 1))
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "LaurentSeries":
        """1/x with precision abs_prec - 2 v."""
        if self.is_zero():
            raise DivideByZeroPoly("inverse of a series that is zero to its precision")
        field = self.field
        v = self.lead_exp
        length = self.abs_prec - v
        a = self.coeffs
        inv_lead = field.inv(a[0])
        b = [inv_lead]
        for k in range(1, length):
            acc = 0
            for i in range(1, min(k, len(a) - 1) + 1):
                if a[i] and b[k - i]:
                    acc = field.add(acc, field.mul(a[i], b[k - i]))
            b.append(field.mul(field.neg(inv_lead), acc))
        return LaurentSeries(field, -v, b, self.abs_prec - 2 * v)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self * other.inverse()

    def frobenius_power(self, t: int) -> "LaurentSeries":
        """x^(p^t), exact on coefficients, exponents and precision."""
        step = self.field.p ** t
        frob = self.field.frobenius
        out = [0] * ((len(self.coeffs) - 1) * step + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * step] = frob(c, t)
        return LaurentSeries(self.field, self.lead_exp * step, out, self.abs_prec * step)

    # --- towers ------------------------------------------------------------

    def lift(self, target: FieldDescriptor) -> "LaurentSeries":
        emb = get_embedding(self.field, target)
        return LaurentSeries(target, self.lead_exp, [emb.lift(c) for c in self.coeffs], self.abs_prec)

    def descend(self, base: FieldDescriptor) -> "LaurentSeries":
        """Raises DescentFailure when some coefficient is not in ``base``."""
        emb: FieldEmbedding = get_embedding(base, self.field)
        return LaurentSeries(base, self.lead_exp, [emb.descend(c) for c in self.coeffs], self.abs_prec)

    def coefficients_in(self, base: FieldDescriptor) -> bool:
        emb = get_embedding(base, self.field)
        return all(emb.contains(c) for c in self.coeffs)

    # --- comparison and output ---------------------------------------------

    def agrees_with(self, other: "LaurentSeries", prec: Optional[int] = None) -> bool:
        """Equality of all coefficients below ``prec`` (default: the common precision)."""
        self._check(other)
        common = min(self.abs_prec, other.abs_prec)
        prec = common if prec is None else min(prec, common)
        start = min(self.lead_exp, other.lead_exp, prec)
        return self._dense(start, prec) == other._dense(start, prec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.lead_exp == other.lead_exp
                and self.abs_prec == other.abs_prec and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.lead_exp, self.abs_prec, self.coeffs))

    def to_json(self) -> Dict:
        if self.field.e == 1:
            coeffs = list(self.coeffs)
        else:
            coeffs = [list(self.field.coords(c)) for c in self.coeffs]
        return {"leadExp": self.lead_exp, "coeffs": coeffs, "absPrec": self.abs_prec}

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                j = self.lead_exp + i
                literal = str(c) if self.field.e == 1 else repr(self.field.element(c))
                terms.append(literal if j == 0 else f"{literal}*T^{-j}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(T^{-self.abs_prec})"


def _convolve(field: FieldDescriptor, a: List[int], b: List[int]) -> List[int]:
    if not a or not b:
        return []
    if field.e == 1:
        prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % field.p
        return prod.tolist()
    add, mul = field.add, field.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out
