"""
Carlitz workbench: wires every component from one RunConfig.
"""

import sys
import time
from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger

# Add parent directory to path for imports
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import (FieldTower, PolyRing, build_field, factor, is_irreducible,
                        is_squarefree, monic_irreducibles, norm_to_base, read_poly, roots_of_unity)
from arithmetic.laurent_series import LaurentSeries
from carlitz import (CarlitzModule, InfinityAnalytics, PadicAnalytics, PowerSums, QuotientAlgebra,
                     get_sequences)
from config.run_config import TOOL_VERSION, RunConfig
from searching import QuestionSearcher, RemarkConstructions, WieferichSearcher, lemma9_modulus
from searching.search_helper import SearchHelper
from apps.verification_suite import VerificationSuite
from utils.errors import UsageError


class CarlitzWorkbench:
    """
    Complete workbench orchestrating field, Carlitz, analytic and search components.

    Every public method returns a JSON-compatible payload with a ``success`` key and,
    for checks, a ``pass`` verdict.
    """

    def __init__(self, config: RunConfig):
        """
        Initialize the workbench.

        Args:
            config (RunConfig): field, precision, seed and budgets
        """
        logger.info(f"Initializing workbench for q = {config.q}...")
        self.config = config
        self.field = build_field(config.p, config.e, allow_q2=config.allow_q2)
        self.ring = PolyRing(self.field)
        self.sequences = get_sequences(self.ring)
        self.carlitz = CarlitzModule(self.ring)
        self.power_sums = PowerSums(self.ring, term_budget=config.term_budget)
        self.infinity = InfinityAnalytics(self.ring, precision=config.precision,
                                          term_budget=config.term_budget)
        self.padic = PadicAnalytics(self.ring, seed=config.seed,
                                    candidate_budget=config.candidate_budget)
        self.searcher = WieferichSearcher(self.ring, seed=config.seed, term_budget=config.term_budget)
        self.remarks = RemarkConstructions(self.searcher, seed=config.seed)
        self.questions = QuestionSearcher(self.searcher, seed=config.seed, term_budget=config.term_budget)
        if config.allow_q2 and config.q == 2:
            logger.warning("q = 2 lies outside the q >= 3 hypothesis; results are exploratory")
        logger.info("Workbench initialized successfully!")

    def header(self) -> Dict:
        header = self.config.to_dict()
        header["modulus"] = self.field.to_dict()["modulus"]
        header["tool_version"] = TOOL_VERSION
        if self.config.allow_q2 and self.config.q == 2:
            header["outsideHypotheses"] = True
        return header

    def poly(self, text: str):
        return read_poly(self.ring, text)

    def prime(self, text: str):
        P = self.poly(text)
        if P.degree < 1 or not P.is_monic() or not is_irreducible(P):
            raise UsageError(f"{text!r} is not a monic irreducible polynomial")
        return P

    def primes_up_to(self, dmax: int) -> List:
        budget = self.config.candidate_budget
        return [P for d in range(1, dmax + 1) for P in monic_irreducibles(self.ring, d, budget)]

    # --- field ---------------------------------------------------------------------

    def field_info(self) -> Dict:
        return {
            "success": True,
            "field": self.field.to_dict(),
            "q": self.field.size,
            "generator": self.field.element(self.field.generator).to_json()
        }

    def field_roots(self, m: int) -> Dict:
        ext, roots = roots_of_unity(m, self.field)
        return {"success": True, "m": m, "extension": ext.to_dict(), "roots": [r.to_json() for r in roots]}

    # --- polynomials -----------------------------------------------------------------

    def poly_factor(self, text: str) -> Dict:
        f = self.poly(text)
        factorization = factor(f, self.config.seed)
        if factorization.expand() != f:
            logger.error(f"Factorization of {f!r} does not multiply back")
        return {
            "success": True,
            "f": repr(f),
            "unit": self.field.element(factorization.unit).to_json(),
            "factors": [{"P": repr(P), "multiplicity": m} for P, m in factorization.factors],
            "pass": factorization.expand() == f
        }

    def poly_properties(self, text: str) -> Dict:
        f = self.poly(text)
        return {
            "success": True,
            "f": repr(f),
            "degree": f.degree,
            "irreducible": f.degree >= 1 and is_irreducible(f),
            "squarefree": is_squarefree(f)
        }

    def poly_irreducibles(self, d: int) -> Dict:
        primes = monic_irreducibles(self.ring, d, self.config.candidate_budget)
        return {"success": True, "d": d, "count": len(primes), "primes": [repr(P) for P in primes]}

    def poly_norm(self, n: int, text: str) -> Dict:
        tower = FieldTower(self.field, n)
        ext_ring = PolyRing(tower.ext, self.ring.var)
        f = read_poly(ext_ring, text)
        return {"success": True, "n": n, "f": repr(f), "extension": tower.ext.to_dict(),
                "norm": repr(norm_to_base(f, tower, self.ring))}

    # --- Carlitz module --------------------------------------------------------------

    def carlitz_phi(self, a_text: str, mod_text: Optional[str] = None, at_text: Optional[str] = None) -> Dict:
        a = self.poly(a_text)
        if at_text is None:
            coeffs = self.carlitz.phi_coeffs(a)
            return {"success": True, "a": repr(a), "coeffs": [repr(c) for c in coeffs.coeffs]}
        x = self.poly(at_text)
        if mod_text is None:
            value = self.carlitz.phi_apply(a, x)
            return {"success": True, "a": repr(a), "x": repr(x), "value": repr(value)}
        algebra = QuotientAlgebra(self.ring, self.poly(mod_text))
        value = self.carlitz.phi_apply(a, algebra.reduce(x), algebra)
        return {"success": True, "a": repr(a), "x": repr(x), "mod": repr(algebra.modulus), "value": repr(value)}

    def carlitz_lemma3(self, dmax: int) -> Dict:
        rows = [self.carlitz.lemma3_report(P) for P in self.primes_up_to(dmax)]
        return {"success": True, "rows": rows, "pass": all(row["pass"] for row in rows)}

    # --- power sums ------------------------------------------------------------------

    def sums_bg(self, i: int, mod_text: Optional[str] = None) -> Dict:
        value = self.power_sums.bernoulli_goss(i)
        record = {"success": True, "i": i, "B": repr(value)}
        if mod_text is not None:
            modulus = self.poly(mod_text)
            record["mod"] = repr(modulus)
            record["BmodP"] = repr(value % modulus)
        return record

    def sums_verify(self, lemma: str, dmax: int) -> Dict:
        rows = []
        for P in self.primes_up_to(dmax):
            if lemma == "lemma1":
                for c in range(2, self.field.size):
                    rows.append({"P": repr(P), "d": P.degree, "c": c, "pass": self.power_sums.lemma1_check(P, c)})
            else:
                rows.append({"P": repr(P), "d": P.degree, "pass": self.power_sums.corollary1_check(P)})
        return {"success": True, "check": lemma, "rows": rows, "pass": all(row["pass"] for row in rows)}

    # --- analysis at infinity ----------------------------------------------------------

    def zeta_check(self, precision: Optional[int] = None) -> Dict:
        precision = precision or self.config.precision
        zeta = self.infinity.zeta_A1(precision)
        log_one = self.infinity.log_C_eval(LaurentSeries.constant(self.field, 1, precision))
        return {"success": True, "precision": precision, "zetaA1": zeta.to_json(),
                "logC1": log_one.to_json(), "pass": zeta.agrees_with(log_one)}

    def zeta_an(self, n: int, degree_cap: int, precision: Optional[int] = None) -> Dict:
        """
        zeta_(A_n)(1) by the ideal sum and by the regulator product, compared.

        Args:
            n (int): degree of the constant field extension
            degree_cap (int): largest degree enumerated in the ideal sum
            precision (int): absolute precision

        Returns:
            Dict: both series and their agreement
        """
        precision = precision or self.config.precision
        start = time.time()
        zeta = self.infinity.zeta_An(n, precision, degree_cap)
        regulator = self.infinity.regulator_An(n, precision)
        elapsed = SearchHelper.elapsed(start)
        logger.info(f"zeta_A{n}(1) vs regulator at precision {precision}: {elapsed}s")
        return {
            "success": True,
            "zeta": zeta.to_json(),
            "regulator": regulator.to_json(),
            "pass": zeta.series.agrees_with(regulator.series),
            "timing": elapsed
        }

    def regulator(self, n: int, precision: Optional[int] = None) -> Dict:
        result = self.infinity.regulator_An(n, precision or self.config.precision)
        return {"success": True, "regulator": result.to_json()}

    # --- P-adic ----------------------------------------------------------------------

    def padic_lemma4(self, P_text: str, n: int) -> Dict:
        result = self.padic.lemma4_solve(self.prime(P_text), n)
        return {"success": True, "result": result.to_json(), "solvable": result.solvable}

    def padic_lemma8(self, P_text: str, n: int) -> Dict:
        record = self.padic.module_structure_check(self.prime(P_text), n)
        record["success"] = True
        return record

    def padic_corollary3(self, P_text: str, degree_cap: int) -> Dict:
        P = self.prime(P_text)
        witness = self.padic.corollary3_search(P, degree_cap)
        return {"success": True, "P": repr(P), "degreeCap": degree_cap,
                "witness": repr(witness) if witness is not None else None,
                "wieferich": self.padic.is_wieferich(P)}

    # --- searches --------------------------------------------------------------------

    def search_wieferich(self, d: int, exhaustive: bool = False) -> Dict:
        report = self.searcher.wieferich_primes(d, self.config.seed, exhaustive=exhaustive)
        record = report.to_json(include_timing=self.config.include_timing)
        record["success"] = True
        return record

    def search_question1(self, b_text: str, dmin: int, dmax: int) -> Dict:
        """
        Question 1 search; ``b_text == "auto"`` uses b = 1 + prod(P_i - 1) over the
        Wieferich primes of degree <= dmax.
        """
        known = []
        for d in range(1, dmax + 1):
            known.extend(self.searcher.wieferich_divisors(d, self.config.seed))
        if b_text == "auto":
            b = lemma9_modulus(known, self.ring)
        else:
            b = self.poly(b_text)
        hits = self.questions.question1_search(b, dmin, dmax, known_wieferich=known, seed=self.config.seed)
        return {"success": True, "b": repr(b), "dmin": dmin, "dmax": dmax,
                "knownWieferich": [repr(P) for P in known], "hits": hits}

    def search_remarks(self) -> Dict:
        v2 = self.remarks.v2_factorization()
        construction = self.remarks.degree_p_construction()
        return {"success": True, "v2": v2, "degreeP": construction,
                "pass": v2["pass"] and construction.get("pass", True)}

    def table_counts(self, dmax: int) -> Dict:
        reports = self.searcher.counts_table(dmax, self.config.seed)
        return {
            "success": True,
            "columns": ["d", "Nq", "M", "N", "bound"],
            "rows": [report.csv_row() for report in reports],
            "reports": [report.to_json(include_timing=self.config.include_timing) for report in reports]
        }

    def verify_all(self, dmax: int) -> Dict:
        return VerificationSuite(self).run_all(dmax)
