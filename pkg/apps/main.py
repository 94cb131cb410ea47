#!/usr/bin/env python3
"""
Main entry point for the Carlitz workbench.

Subcommands:
- field, poly: finite fields and F_q[T]
- carlitz, sums: the Carlitz module, power sums and Bernoulli-Goss numbers
- zeta, padic: analysis at infinity and at a prime P
- search, table: Wieferich primes and the Question 1 experiment
- verify: the full lemma suite
"""

import sys
import argparse
from pathlib import Path
from typing import Callable, Dict, List, Optional

from loguru import logger

# Add parent directory to path for imports
sys.path.append(str(Path(__file__).parent.parent))

from apps.workbench import CarlitzWorkbench
from config.run_config import (DEFAULT_CANDIDATE_BUDGET, DEFAULT_PRECISION, DEFAULT_SEED,
                               DEFAULT_TERM_BUDGET, OUTPUT_FORMATS, TOOL_VERSION, RunConfig, parse_q)
from utils.errors import CarlitzError, UsageError
from utils.report_writer import ReportWriter

LOG_FORMAT = ("<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
              "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>")


def configure_logging(verbose: bool = False):
    """Logs go to stderr; stdout carries only the report."""
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level="DEBUG" if verbose else "INFO")


def run_field(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "roots":
        return wb.field_roots(args.m)
    return wb.field_info()


def run_poly(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "factor":
        return wb.poly_factor(args.f)
    if args.action == "irreducibles":
        return wb.poly_irreducibles(args.d)
    if args.action == "norm":
        return wb.poly_norm(args.n, args.f)
    return wb.poly_properties(args.f)


def run_carlitz(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "lemma3":
        if args.P:
            record = wb.carlitz.lemma3_report(wb.prime(args.P))
            return {"success": True, "rows": [record], "pass": record["pass"]}
        return wb.carlitz_lemma3(args.dmax)
    return wb.carlitz_phi(args.a, args.mod, args.at)


def run_sums(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "bg":
        return wb.sums_bg(args.i, args.mod)
    return wb.sums_verify("lemma1" if args.lemma1 else "corollary1", args.dmax)


def run_zeta(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "an":
        return wb.zeta_an(args.n, args.cap)
    if args.action == "regulator":
        return wb.regulator(args.n)
    return wb.zeta_check()


def run_padic(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "lemma4":
        return wb.padic_lemma4(args.P, args.n)
    if args.action == "lemma8":
        return wb.padic_lemma8(args.P, args.n)
    return wb.padic_corollary3(args.P, args.cap)


def run_search(wb: CarlitzWorkbench, args) -> Dict:
    if args.action == "question1":
        return wb.search_question1(args.b, args.dmin, args.dmax)
    if args.action == "remarks":
        return wb.search_remarks()
    return wb.search_wieferich(args.d, args.exhaustive)


def run_table(wb: CarlitzWorkbench, args) -> Dict:
    return wb.table_counts(args.dmax)


def run_verify(wb: CarlitzWorkbench, args) -> Dict:
    return wb.verify_all(args.dmax)


HANDLERS: Dict[str, Callable] = {
    "field": run_field,
    "poly": run_poly,
    "carlitz": run_carlitz,
    "sums": run_sums,
    "zeta": run_zeta,
    "padic": run_padic,
    "search": run_search,
    "table": run_table,
    "verify": run_verify,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--q', default="3", help='field size as a prime power literal (default: 3)')
    common.add_argument('--prec', type=int, default=DEFAULT_PRECISION, metavar='N',
                        help=f'absolute 1/T precision (default: {DEFAULT_PRECISION})')
    common.add_argument('--seed', type=int, default=DEFAULT_SEED, help='factorization and sampling seed')
    common.add_argument('--budget-terms', type=int, default=DEFAULT_TERM_BUDGET, metavar='N',
                        help='cap on enumerated polynomials')
    common.add_argument('--budget-candidates', type=int, default=DEFAULT_CANDIDATE_BUDGET, metavar='N',
                        help='cap on search candidates')
    common.add_argument('--format', choices=OUTPUT_FORMATS, default="json", help='report format')
    common.add_argument('--out', metavar='PATH', help='write the report to PATH instead of stdout')
    common.add_argument('--allow-q2', action='store_true', help='accept q = 2 (outside q >= 3)')
    common.add_argument('--timing', action='store_true', help='include timings in the report')
    common.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        description="Carlitz workbench - exact Carlitz module arithmetic and Wieferich prime search",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s carlitz phi --q 3 --a "T^2 + 1"
  %(prog)s search wieferich --q 4 --d 2 --seed 7
  %(prog)s table counts --q 3 --dmax 5 --format csv
  %(prog)s verify all --q 3 --dmax 2
        """
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def group(name: str, help_text: str):
        sub = commands.add_parser(name, help=help_text)
        return sub.add_subparsers(dest="action", required=True)

    field = group("field", "finite field descriptors")
    field.add_parser("info", parents=[common])
    roots = field.add_parser("roots", parents=[common])
    roots.add_argument('--m', type=int, required=True)

    poly = group("poly", "polynomials over F_q")
    for action in ("factor", "props"):
        sub = poly.add_parser(action, parents=[common])
        sub.add_argument('--f', required=True)
    irreducibles = poly.add_parser("irreducibles", parents=[common])
    irreducibles.add_argument('--d', type=int, required=True)
    norm = poly.add_parser("norm", parents=[common])
    norm.add_argument('--n', type=int, required=True)
    norm.add_argument('--f', required=True, help='monic polynomial over F_(q^n)')

    carlitz = group("carlitz", "the Carlitz module")
    phi = carlitz.add_parser("phi", parents=[common])
    phi.add_argument('--a', required=True)
    phi.add_argument('--mod')
    phi.add_argument('--at')
    lemma3 = carlitz.add_parser("lemma3", parents=[common])
    lemma3.add_argument('--P')
    lemma3.add_argument('--dmax', type=int, default=2)

    sums = group("sums", "power sums and Bernoulli-Goss numbers")
    bg = sums.add_parser("bg", parents=[common])
    bg.add_argument('--i', type=int, required=True)
    bg.add_argument('--mod')
    verify_sums = sums.add_parser("verify", parents=[common])
    which = verify_sums.add_mutually_exclusive_group(required=True)
    which.add_argument('--lemma1', action='store_true')
    which.add_argument('--cor1', action='store_true')
    verify_sums.add_argument('--dmax', type=int, default=2)

    zeta = group("zeta", "zeta values and the regulator at infinity")
    zeta.add_parser("check", parents=[common])
    an = zeta.add_parser("an", parents=[common])
    an.add_argument('--n', type=int, required=True)
    an.add_argument('--cap', type=int, default=3)
    regulator = zeta.add_parser("regulator", parents=[common])
    regulator.add_argument('--n', type=int, required=True)

    padic = group("padic", "P-adic solvability and module structure")
    for action in ("lemma4", "lemma8"):
        sub = padic.add_parser(action, parents=[common])
        sub.add_argument('--P', required=True)
        sub.add_argument('--n', type=int, default=2)
    cor3 = padic.add_parser("cor3", parents=[common])
    cor3.add_argument('--P', required=True)
    cor3.add_argument('--cap', type=int, default=2)

    search = group("search", "Wieferich prime searches")
    wieferich = search.add_parser("wieferich", parents=[common])
    wieferich.add_argument('--d', type=int, required=True)
    wieferich.add_argument('--exhaustive', action='store_true')
    question1 = search.add_parser("question1", parents=[common])
    question1.add_argument('--b', default="1", help='monic modulus, or "auto"')
    question1.add_argument('--dmin', type=int, default=1)
    question1.add_argument('--dmax', type=int, default=2)
    search.add_parser("remarks", parents=[common])

    table = group("table", "count tables")
    counts = table.add_parser("counts", parents=[common])
    counts.add_argument('--dmax', type=int, required=True)

    verify = group("verify", "the full lemma suite")
    verify_all = verify.add_parser("all", parents=[common])
    verify_all.add_argument('--dmax', type=int, default=2)
    return parser


def _report_error(writer: ReportWriter, exc: CarlitzError) -> int:
    logger.error(f"{exc.code}: {exc.message}")
    writer.write_error(exc.to_record())
    return exc.exit_status


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand and emit its report.

    Args:
        argv (List[str]): arguments without the program name

    Returns:
        int: 0 on success, 1 on a failed check, 2 on usage errors, 3 on domain errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.verbose)
    writer = ReportWriter({"q": args.q, "tool_version": TOOL_VERSION}, args.format, args.out,
                          include_timing=args.timing)
    try:
        p, e = parse_q(args.q)
        writer.header = {"q": p ** e, "p": p, "e": e, "precision": args.prec, "seed": args.seed,
                         "tool_version": TOOL_VERSION}
        config = RunConfig(p=p, e=e, precision=args.prec, seed=args.seed,
                           term_budget=args.budget_terms, candidate_budget=args.budget_candidates,
                           output_format=args.format, output_path=args.out,
                           allow_q2=args.allow_q2, include_timing=args.timing)
        writer.header = dict(config.to_dict(), tool_version=TOOL_VERSION)
        workbench = CarlitzWorkbench(config)
        writer.header = workbench.header()
        payload = HANDLERS[args.command](workbench, args)
        writer.write(payload)
    except CarlitzError as exc:
        return _report_error(writer, exc)
    except ValueError as exc:
        # out-of-range arguments caught by the operations themselves
        return _report_error(writer, UsageError(str(exc)))
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return 130

    if isinstance(payload, dict) and payload.get("pass") is False:
        logger.error(f"{args.command} {args.action}: verification failed")
        return 1
    return 0


def main():
    """Main entry point with command-line argument parsing."""
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
