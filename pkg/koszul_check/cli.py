"""
Command-line interface for Koszul Check.
"""

import argparse
import sys
from typing import List, Optional

from koszul_check import __version__
from koszul_check.core import ORACLE_CHECKS, KoszulChecker
from koszul_check.exceptions import InputParseError, KoszulCheckError, WindowExhaustedError
from koszul_check.linalg import FieldSpec
from koszul_check.parsers import parse_input
from koszul_check.reporters import REPORTERS, get_reporter
from koszul_check.utils.config import load_settings
from koszul_check.utils.logger import configure_logger, debug, error, info


def parse_field(value: str) -> FieldSpec:
    """Parse a --field value such as ``q`` or ``p3``.

    Raises:
        argparse.ArgumentTypeError: If the value is invalid
    """
    try:
        return FieldSpec.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="Path to the input document (.json or .toml)")
    common.add_argument("--max-degree", type=int, help="Truncation degree N (default: 8)")
    common.add_argument("--max-syzygy", type=int, help="Number of syzygy steps checked (default: 6)")
    common.add_argument("--field", type=parse_field, help="Override the input's field: q or pP")
    common.add_argument("--budget", type=int, help="Enumeration budget for Hom-spaces and the oracle (default: 1000000)")
    common.add_argument("--format", choices=sorted(REPORTERS), default="text", help="Output format (default: text)")
    common.add_argument("--output", help="Save report to file instead of stdout")
    common.add_argument("--config", help="TOML file with a [koszul-check] table")
    common.add_argument("--oracle-field", type=parse_field, help="Prime field of the brute-force oracle (default: p2)")
    common.add_argument("--oracle-degree", type=int, help="Largest total degree searched by the oracle (default: 4)")
    common.add_argument("--max-workers", type=int, help="Worker threads for per-simple checks (default: CPU count * 2)")
    common.add_argument("--verbose", action="store_true", help="Show progress of every computation")
    common.add_argument("--log-file", help="Also write the log to this file")

    parser = argparse.ArgumentParser(
        prog="koszul-check",
        description="Decide domain, piecewise-domain and prime properties of quadratic quiver algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("dual", parents=[common], help="Print the quadratic dual presentation")
    commands.add_parser("classify", parents=[common], help="Piecewise domain, prime and domain verdicts")
    commands.add_parser("cy2", parents=[common], help="classify plus the 2-Calabi-Yau screen and component split")
    commands.add_parser("preprojective", parents=[common], help="Preprojective algebra of the input quiver")
    hilbert = commands.add_parser("hilbert", parents=[common], help="Corner dimension grids and Hilbert series")
    hilbert.add_argument("--dual", action="store_true", help="Use the quadratic dual instead of the input algebra")
    hilbert.add_argument("--structure", action="store_true", help="Also dump every structure constant")
    commands.add_parser("ext", parents=[common], help="Compare A with Ext(S, S) computed over A!")
    commands.add_parser("koszul", parents=[common], help="Koszulness of A and of A!")
    condition = commands.add_parser("syzygy-condition", parents=[common], help="Koszul syzygy condition on A!")
    condition.add_argument("--direct", action="store_true", help="Check the input algebra itself")
    oracle = commands.add_parser("oracle", parents=[common], help="Brute-force verifiers over a prime field")
    oracle.add_argument("--check", choices=ORACLE_CHECKS, default="all", help="Which oracle to run (default: all)")
    oracle.add_argument("--direct", action="store_true", help="Resolve simples over the input algebra, not A!")
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    return build_parser().parse_args(argv)


def run(args: argparse.Namespace):
    """Parse the input, merge settings and run the command."""
    document = parse_input(args.input)
    settings = load_settings(args.config)
    settings = settings.merged(document.options)
    settings = settings.merged({
        "max_degree": args.max_degree,
        "max_syzygy": args.max_syzygy,
        "field": args.field,
        "budget": args.budget,
        "oracle_field": args.oracle_field,
        "oracle_degree": args.oracle_degree,
        "max_workers": args.max_workers,
    })
    debug(f"settings: {settings}")
    checker = KoszulChecker(settings)

    if args.command == "hilbert":
        return checker.hilbert(document, dual=args.dual, structure=args.structure)
    if args.command == "syzygy-condition":
        return checker.syzygy_condition(document, direct=args.direct)
    if args.command == "oracle":
        return checker.oracle(document, check=args.check, direct=args.direct)
    return getattr(checker, args.command.replace("-", "_"))(document)


def main(argv: Optional[List[str]] = None):
    """Main entry point for the CLI."""
    args = parse_args(argv)

    # Configure logger based on verbose flag
    configure_logger(verbose=args.verbose, log_file=args.log_file)

    try:
        info(f"Running {args.command} on {args.input}")
        report = run(args)
    except InputParseError as e:
        error(f"Invalid input: {e}")
        sys.exit(1)
    except (KoszulCheckError, ValueError) as e:
        error(f"Error running {args.command}: {e}")
        if isinstance(e, WindowExhaustedError) and e.reached is not None:
            error(f"Window exhausted after reaching {e.reached}; raise --max-degree")
        if args.verbose:
            import traceback
            error(traceback.format_exc())
        sys.exit(1)

    reporter = get_reporter(args.format)
    output = reporter.generate_report(report)

    # Output the report
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(output + "\n")
            print(f"Report saved to {args.output}", file=sys.stderr)
        except OSError as e:
            error(f"Error saving report: {e}")
            sys.exit(1)
    else:
        print(output)

    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
