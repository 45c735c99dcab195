"""
Command-line front end.

Every subcommand is a thin wrapper over one library call. Exit codes:
0 ok, 1 invalid input, 2 unsupported spec, 3 cross-check mismatch.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config.settings import (
    DEFAULT_X_MAX,
    DEFAULT_Y_MAX,
    FAMILY_EXPAND_LIMIT,
    LOG_DATEFMT,
    LOG_FORMAT,
    LOG_LEVEL,
    MORDELL_X_BOUND,
    OUTPUT_FORMATS,
    get_output_format,
)
from constant import EXIT_INVALID_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_UNSUPPORTED
from cli import render
from solvers import classical, mordell, theorems
from solvers.errors import UnsupportedSpecError
from solvers.search import EquationSpec, SearchBounds, brute_force
from utils import primes

logger = logging.getLogger(__name__)


class UsageError(ValueError):
    """Raised instead of argparse's own exit so usage errors map to exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ============================================================================
# HANDLERS
# ============================================================================


def _spec(args) -> EquationSpec:
    return EquationSpec(args.alpha, args.beta, args.p, args.k)


def _emit(lines: List[str]) -> None:
    for line in lines:
        print(line)


def cmd_solve(args) -> int:
    spec = _spec(args)
    solution_set = theorems.closed_form(spec)

    expansions = []
    if args.expand > 0:
        for family in theorems.theorem_for(solution_set.tag).families:
            members = theorems.expand_family(family, family.n_min, family.n_min + args.expand - 1)
            expansions.extend(
                (family, family.n_min + i, member) for i, member in enumerate(members)
            )

    _emit(render.render_solution_set(solution_set, expansions, args.format))
    return EXIT_OK


def cmd_search(args) -> int:
    spec = _spec(args)
    solutions = brute_force(spec, SearchBounds(args.xmax, args.ymax))
    _emit(render.render_search(spec, args.xmax, args.ymax, solutions, args.format))
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    report = theorems.cross_check(_spec(args), SearchBounds(args.xmax, args.ymax))
    _emit(render.render_cross_check(report, args.format))
    if report.verdict is theorems.CrossCheckVerdict.MISMATCH:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_sg(args) -> int:
    if args.mod < 2 or args.mod & (args.mod - 1):
        raise ValueError(f"--mod must be a power of two >= 2, got {args.mod}")
    m = args.mod.bit_length() - 1

    if args.stats and args.residue is not None:
        raise ValueError("--stats counts every class; drop --class")

    if args.stats:
        stats = primes.sg_density_stats(args.limit, m)
        title = (
            f"Odd Sophie Germain primes <= {args.limit} by class mod {stats.modulus} "
            f"(total {stats.total}, p=2 {'included' if stats.two_included else 'absent'})"
        )
        extra = {"limit": args.limit, "modulus": stats.modulus, "two_included": stats.two_included}
        _emit(render.render_counts(title, stats.counts, extra, args.format))
        return EXIT_OK

    if args.residue is None:
        values = [pair.p for pair in primes.enumerate_sg(args.limit)]
        title = f"Sophie Germain primes <= {args.limit}"
        extra = {"limit": args.limit}
    else:
        values = primes.sg_residue_class(args.limit, m, args.residue)
        title = f"Sophie Germain primes <= {args.limit} with p = {args.residue} (mod {args.mod})"
        extra = {"limit": args.limit, "modulus": args.mod, "class": args.residue}
    _emit(render.render_int_list(title, "primes", values, extra, args.format))
    return EXIT_OK


def cmd_mordell(args) -> int:
    certificate = mordell.certify_points(mordell.get_curve(args.n), args.xbound)
    title = (
        f"Integral points on y^2 = x^3 {'-' if args.n < 0 else '+'} {abs(args.n)} with |x| <= {args.xbound}"
        f"{' (matches trusted table)' if certificate.table_trusted else ''}"
    )
    rows = [(pt.x, pt.y) for pt in certificate.points]
    _emit(render.render_tuples(title, ("x", "y"), rows, args.format))
    return EXIT_OK


def cmd_catalan(args) -> int:
    found = classical.catalan_search(args.amax, args.bmax, args.xmax, args.ymax)
    rows = [(s.a, s.b, s.x, s.y) for s in found]
    _emit(render.render_tuples("Solutions of a^x - b^y = 1", ("a", "b", "x", "y"), rows, args.format))
    return EXIT_OK


def cmd_nl(args) -> int:
    found = classical.nagell_ljunggren_search(args.xmax, args.nmax, args.qmax)
    rows = [(s.x, s.y, s.n, s.q) for s in found]
    _emit(render.render_tuples("Solutions of (x^n-1)/(x-1) = y^q", ("x", "y", "n", "q"), rows, args.format))
    return EXIT_OK


def cmd_lemma(args) -> int:
    if args.name == "five-power":
        rows = mordell.solve_5x_eq_4_plus_square(args.confirm)
        title, names = "Solutions of 5^x = 4 + y^2", ("x", "y")
    elif args.name == "twice-five-power":
        rows = mordell.solve_2_5x_eq_1_plus_square(args.confirm)
        title, names = "Solutions of 2*5^x = 1 + y^2", ("x", "y")
    elif args.name == "prime-power-plus-one":
        if args.p is None:
            raise ValueError("prime-power-plus-one needs -p")
        rows = classical.solve_px_plus_one_square(args.p)
        title, names = f"Solutions of {args.p}^x + 1 = y^2", ("x", "y")
    else:
        if args.p is None or args.k is None:
            raise ValueError("safe-power needs -p and -k")
        rows = classical.solve_safe_power_square(args.p, args.k)
        title, names = f"Solutions of 1 + (2^{args.k}*{2 * args.p + 1})^y = z^2", ("y", "z")
    _emit(render.render_tuples(title, names, rows, args.format))
    return EXIT_OK


# ============================================================================
# PARSER
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=get_output_format(),
        help="output format (default from OUTPUT_FORMAT)",
    )

    equation = _Parser(add_help=False)
    equation.add_argument("-a", "--alpha", type=int, required=True)
    equation.add_argument("-b", "--beta", type=int, required=True)
    equation.add_argument("-p", type=int, required=True, help="Sophie Germain prime")
    equation.add_argument("-k", type=int, required=True, help="exponent of 2 in 2^k(2p+1)")

    bounds = _Parser(add_help=False)
    bounds.add_argument("--xmax", type=int, default=DEFAULT_X_MAX)
    bounds.add_argument("--ymax", type=int, default=DEFAULT_Y_MAX)

    parser = _Parser(
        prog="sgdio",
        description="Solve (-1)^a p^x + (-1)^b (2^k(2p+1))^y = z^2 for Sophie Germain primes p.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", parents=[common, equation], help="closed-form solution set")
    solve.add_argument("--expand", type=int, default=FAMILY_EXPAND_LIMIT,
                       help="list members n_min..n_min+N-1 of each family, at every k")
    solve.set_defaults(handler=cmd_solve)

    search = sub.add_parser("search", parents=[common, equation, bounds], help="brute-force search")
    search.set_defaults(handler=cmd_search)

    crosscheck = sub.add_parser("crosscheck", parents=[common, equation, bounds],
                                help="closed form vs brute force")
    crosscheck.set_defaults(handler=cmd_crosscheck)

    sg = sub.add_parser("sg", parents=[common], help="Sophie Germain primes")
    sg.add_argument("--limit", type=int, required=True)
    sg.add_argument("--mod", type=int, default=8, help="power-of-two modulus")
    sg.add_argument("--class", dest="residue", type=int, default=None, help="odd residue")
    sg.add_argument("--stats", action="store_true", help="count per odd residue class")
    sg.set_defaults(handler=cmd_sg)

    curve = sub.add_parser("mordell", parents=[common], help="integral points on y^2 = x^3 + n")
    curve.add_argument("-n", type=int, required=True)
    curve.add_argument("--xbound", type=int, default=MORDELL_X_BOUND)
    curve.set_defaults(handler=cmd_mordell)

    catalan = sub.add_parser("catalan", parents=[common], help="bounded Catalan search")
    for flag in ("--amax", "--bmax", "--xmax", "--ymax"):
        catalan.add_argument(flag, type=int, required=True)
    catalan.set_defaults(handler=cmd_catalan)

    nl = sub.add_parser("nl", parents=[common], help="bounded Nagell-Ljunggren search")
    for flag in ("--xmax", "--nmax", "--qmax"):
        nl.add_argument(flag, type=int, required=True)
    nl.set_defaults(handler=cmd_nl)

    lemma = sub.add_parser("lemma", parents=[common], help="auxiliary lemma solvers")
    lemma.add_argument(
        "name", choices=("five-power", "twice-five-power", "prime-power-plus-one", "safe-power")
    )
    lemma.add_argument("-p", type=int, default=None)
    lemma.add_argument("-k", type=int, default=None)
    lemma.add_argument("--confirm", type=int, default=30, help="brute-scan bound for x")
    lemma.set_defaults(handler=cmd_lemma)

    return parser


def configure_logging() -> None:
    logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return its exit status.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
    """
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        status = args.handler(args)
    except UnsupportedSpecError as e:
        print(f"unsupported: {e.reason}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    logger.debug(f"Command {args.command} finished with status {status}")
    return status
