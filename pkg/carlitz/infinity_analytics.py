"""
Analysis at infinity: e_C and log_C on truncated Laurent series, zeta values at 1
and the regulator of F_(q^n)[T].
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from loguru import logger

from arithmetic.arithmetic_helper import ArithmeticHelper
from arithmetic.field_tower import FieldDescriptor, FieldElement, FieldTower, roots_of_unity
from arithmetic.laurent_series import LaurentSeries
from arithmetic.norms import norm_to_base
from arithmetic.poly_ring import Poly, PolyRing
from config.run_config import DEFAULT_PRECISION, DEFAULT_TERM_BUDGET
from utils.errors import BudgetExceeded, DescentFailure, OutsideConvergenceDomain
from .basic_sequences import get_sequences
from .power_sums import PowerSums

DEFAULT_DEGREE_CAP = 3


@dataclass
class ZetaAnResult:
    """Truncated zeta_(A_n)(1) with the per-degree layer valuations that produced it."""

    n: int
    degree_cap: int
    series: LaurentSeries
    layer_valuations: Dict[int, int] = field(default_factory=dict)

    @property
    def last_contributing_degree(self) -> int:
        contributing = [j for j, v in self.layer_valuations.items() if v < self.series.abs_prec]
        return max(contributing) if contributing else -1

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "degreeCap": self.degree_cap,
            "series": self.series.to_json(),
            "layerValuations": {str(j): v for j, v in sorted(self.layer_valuations.items())},
            "lastContributingDegree": self.last_contributing_degree
        }


@dataclass
class RegulatorResult:
    """Sign-normalized regulator with the raw determinant's leading coefficient."""

    n: int
    m: int
    ell: int
    series: LaurentSeries
    raw_leading: List[int]

    def to_json(self) -> Dict:
        return {"n": self.n, "m": self.m, "ell": self.ell,
                "series": self.series.to_json(), "rawLeadingCoefficient": self.raw_leading}


class InfinityAnalytics:
    """
    Carlitz exponential and logarithm at infinity and the zeta identities built on them.

    Args:
        ring (PolyRing): A = F_q[T]
        precision (int): default absolute precision in 1/T
        term_budget (int): cap on monic polynomials enumerated by zeta_An
    """

    def __init__(self, ring: PolyRing, precision: int = DEFAULT_PRECISION,
                 term_budget: int = DEFAULT_TERM_BUDGET):
        self.ring = ring
        self.base = ring.field
        self.q = ring.field.size
        self.precision = precision
        self.term_budget = term_budget
        self.sequences = get_sequences(ring)
        self.power_sums = PowerSums(ring, term_budget)
        self._reciprocals: Dict[Tuple[str, int, int], LaurentSeries] = {}

    def _reciprocal(self, kind: str, i: int, prec: int, target: FieldDescriptor) -> LaurentSeries:
        key = (kind, i, prec)
        if key not in self._reciprocals:
            poly = self.sequences.L(i) if kind == "L" else self.sequences.D(i)
            self._reciprocals[key] = LaurentSeries.reciprocal_poly(poly, prec)
        series = self._reciprocals[key]
        return series if target == self.base else series.lift(target)

    def in_log_domain(self, x: LaurentSeries) -> bool:
        """v_inf(x) > -q/(q-1)."""
        return x.is_zero() or x.valuation * (self.q - 1) + self.q > 0

    def log_C_eval(self, x: LaurentSeries) -> LaurentSeries:
        """
        log_C(x) = sum_i x^(q^i) / L_i on v_inf(x) > -q/(q-1).

        Args:
            x (LaurentSeries): argument over F_q or an extension of it

        Returns:
            LaurentSeries: log_C(x) to the precision of x
        """
        if not self.in_log_domain(x):
            raise OutsideConvergenceDomain(
                f"log_C needs v_inf(x) > -q/(q-1), got valuation {x.valuation}", valuation=x.valuation)
        target = x.abs_prec
        if x.is_zero():
            return x
        e = self.base.e
        v = x.valuation
        total = x
        i = 1
        while self.q ** i * v + self.sequences.deg_L(i) < target:
            power = x.frobenius_power(e * i)
            term = power * self._reciprocal("L", i, target - self.q ** i * v, x.field)
            total = total + term.truncate(target)
            i += 1
        return total.truncate(target)

    def e_C_eval(self, x: LaurentSeries) -> LaurentSeries:
        """
        e_C(x) = sum_i x^(q^i) / D_i, truncated at the precision of x.

        Args:
            x (LaurentSeries): argument over F_q or an extension of it

        Returns:
            LaurentSeries: e_C(x); its abs_prec shows any precision lost to negative valuations
        """
        target = x.abs_prec
        if x.is_zero():
            return x
        e = self.base.e
        v = x.valuation
        total = x
        i = 1
        while True:
            term_val = self.q ** i * (v + i)
            if i > -v and term_val >= target:
                break
            if term_val < target:
                power = x.frobenius_power(e * i)
                term = power * self._reciprocal("D", i, target - self.q ** i * v, x.field)
                total = total + term.truncate(target)
            i += 1
        return total.truncate(target)

    def functional_equation_check(self, x: LaurentSeries) -> bool:
        """e_C(T x) = T e_C(x) + e_C(x)^q at the common precision."""
        e = self.base.e
        left = self.e_C_eval(x.shift(1))
        ex = self.e_C_eval(x)
        right = ex.shift(1) + ex.frobenius_power(e)
        return left.agrees_with(right)

    def zeta_A1(self, precision: int = None) -> LaurentSeries:
        """
        zeta_A(1) = sum_j S_j(-1) = sum_j 1/L_j to the given precision.

        Args:
            precision (int): absolute precision N >= 1

        Returns:
            LaurentSeries: the truncated value over F_q
        """
        precision = precision or self.precision
        total = LaurentSeries.zero(self.base, precision)
        j = 0
        while self.sequences.deg_L(j) < precision:
            layer = self.power_sums.power_sum(j, -1)
            total = total + LaurentSeries.from_rational(layer, precision)
            j += 1
        return total

    def normal_basis_element(self, n: int) -> FieldElement:
        """
        Smallest alpha in F_(q^n) whose q-power conjugates are F_q-independent.

        Args:
            n (int): degree of the extension

        Returns:
            FieldElement: alpha, certified by a rank computation over F_p
        """
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        tower = FieldTower(self.base, n)
        if n == 1:
            return tower.ext.element(1)
        for code in tower.ext.elements_lex():
            if code and self.normal_basis_certificate(tower, code):
                logger.debug(f"Normal basis generator of {tower.ext!r}: {tower.ext.element(code)!r}")
                return tower.ext.element(code)
        raise RuntimeError(f"no normal basis element found in {tower.ext!r}")

    def normal_basis_certificate(self, tower: FieldTower, code: int) -> bool:
        """Rank e*n over F_p of {b * alpha^(q^i)} for an F_p-basis b of F_q."""
        ext = tower.ext
        basis = [tower.lift(self.base.from_coords([0] * k + [1])) for k in range(self.base.e)]
        rows = []
        for i in range(tower.n):
            conj = tower.frobenius_q(code, i)
            rows.extend(ext.coords(ext.mul(b, conj)) for b in basis)
        return ArithmeticHelper.rank_mod_p(rows, ext.p) == ext.e

    def log_alpha_unit_check(self, n: int, precision: int = None) -> bool:
        """log_C(alpha) is a unit of F_(q^n)[[1/T]] for the normal basis generator alpha."""
        precision = precision or self.precision
        alpha = self.normal_basis_element(n)
        value = self.log_C_eval(LaurentSeries.constant(alpha.descriptor, alpha.code, precision))
        return not value.is_zero() and value.valuation == 0

    def layer_valuation_bound(self, n: int, j: int) -> int:
        """Lower bound for v_inf of the degree-j layer of zeta_(A_n)(1)."""
        return n * j + n * (self.q - 1) * j * (j + 1) // 2

    def zeta_An(self, n: int, precision: int = None, degree_cap: int = DEFAULT_DEGREE_CAP) -> ZetaAnResult:
        """
        sum over monic f in F_(q^n)[T] of degree <= cap of 1/N(f).

        Args:
            n (int): degree of the constant field extension
            precision (int): absolute precision
            degree_cap (int): largest degree J enumerated

        Returns:
            ZetaAnResult: the series and the valuation of every layer
        """
        precision = precision or self.precision
        tower = FieldTower(self.base, n)
        size = tower.ext.size
        if size ** degree_cap > self.term_budget:
            raise BudgetExceeded(f"q^(nJ) = {size ** degree_cap} exceeds the term budget",
                                 budget=self.term_budget)
        if self.layer_valuation_bound(n, degree_cap + 1) < precision:
            logger.warning(f"Degree cap {degree_cap} may be too small for precision {precision} (n = {n})")
        ext_ring = PolyRing(tower.ext, self.ring.var)
        total = LaurentSeries.zero(self.base, precision)
        valuations: Dict[int, int] = {}
        for j in range(degree_cap + 1):
            norms = Counter(norm_to_base(f, tower, self.ring).coeffs for f in ext_ring.monic_polys(j))
            layer = LaurentSeries.zero(self.base, precision)
            for coeffs, count in sorted(norms.items()):
                weight = self.base.from_int(count)
                if weight:
                    series = LaurentSeries.reciprocal_poly(Poly(self.ring, coeffs), precision)
                    layer = layer + series.scale(weight)
            valuations[j] = layer.valuation
            total = total + layer
            logger.debug(f"zeta_A{n} layer {j}: {sum(norms.values())} polynomials, valuation {layer.valuation}")
        return ZetaAnResult(n, degree_cap, total, valuations)

    def regulator_An(self, n: int, precision: int = None) -> RegulatorResult:
        """
        Sign-normalized ((-1)^(m-1) prod_(zeta in mu_m) sum_i c_i zeta^i)^(p^l) with
        c_i = sum_(j = i mod n) 1/L_j and n = m p^l.

        Args:
            n (int): degree of the constant field extension
            precision (int): absolute precision

        Returns:
            RegulatorResult: the series over F_q and the raw determinant's leading coefficient
        """
        precision = precision or self.precision
        p = self.base.p
        m, ell = n, 0
        while m % p == 0:
            m, ell = m // p, ell + 1
        classes = [LaurentSeries.zero(self.base, precision) for _ in range(n)]
        j = 0
        while self.sequences.deg_L(j) < precision:
            classes[j % n] = classes[j % n] + self._reciprocal("L", j, precision, self.base)
            j += 1
        ext, roots = roots_of_unity(m, self.base)
        lifted = [c.lift(ext) for c in classes]
        product = LaurentSeries.constant(ext, 1, precision)
        for zeta in roots:
            factor_series = LaurentSeries.zero(ext, precision)
            for i, c in enumerate(lifted):
                factor_series = factor_series + c.scale(ext.pow(zeta.code, i))
            product = product * factor_series
        if m % 2 == 0:
            product = -product
        product = product.frobenius_power(ell).truncate(precision)
        try:
            raw = product.descend(self.base)
        except DescentFailure:
            logger.error(f"Regulator product for n = {n} has coefficients outside {self.base!r}")
            raise
        lead = raw.coefficient(raw.valuation) if not raw.is_zero() else 1
        normalized = raw.scale(self.base.inv(lead))
        return RegulatorResult(n, m, ell, normalized, list(self.base.coords(lead)))
