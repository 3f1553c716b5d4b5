"""
Command-line argument parser.
"""

import argparse
from typing import List, Optional

from ..spectral import SolverRegistry
from ..verification import suite_names


def parse_dims(text: str) -> List[int]:
    """
    Parse a comma-separated dimension list such as "2,4,8".

    An empty string gives an empty list.
    """
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        dims = [int(item) for item in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Dimensions must be comma-separated integers, got '{text}'")
    if any(n < 1 for n in dims):
        raise argparse.ArgumentTypeError(f"Dimensions must be positive, got '{text}'")
    return dims


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected an integer >= 1, got {text}")
    return value


def _unsigned_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"Expected an unsigned integer, got {text}")
    return value


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress progress output and tracebacks (errors still print)"
    )
    common.add_argument(
        "--out",
        default=None,
        help="Write the JSON result to this path instead of stdout"
    )

    parser = argparse.ArgumentParser(
        prog="kahler-qm",
        description="Quantum mechanics on real Kähler spaces, verified against complex Hilbert space.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Run one verification suite
  kahler-qm verify --suite axioms --dims 4 --trials 100 --seed 1

  # Run everything with the acceptance profile, four worker threads
  kahler-qm verify --suite all --profile acceptance --workers 4 --out report.json

  # Decompose an operator
  kahler-qm spectral --input operator.json --method closed-form

  # Correlation function through g + i omega
  kahler-qm correlate --query query.json

  # Sample a Bell register
  kahler-qm simulate bell --shots 100000 --seed 7

  # Group membership of a real matrix
  kahler-qm group check --input matrix.json

  # Structured vs dense timing
  kahler-qm bench --dims 2,4,8,16,32 --trials 3
        """
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    # verify
    verify = subparsers.add_parser(
        "verify", parents=[common], help="Run a verification suite and emit a JSON report"
    )
    verify.add_argument(
        "--suite",
        required=True,
        choices=suite_names(),
        help="Suite to run ('all' runs every suite)"
    )
    verify.add_argument(
        "--profile",
        default="standard",
        help="Profile reference: built-in name, file path, or path:name. Default: standard"
    )
    verify.add_argument("--dims", type=parse_dims, default=None, help="Comma-separated complex dimensions")
    verify.add_argument("--trials", type=_positive_int, default=None, help="Random trials per dimension")
    verify.add_argument("--seed", type=_unsigned_int, default=None, help="Unsigned master seed")
    verify.add_argument("--tol", type=float, default=None, help="Pass bound on every check residual")
    verify.add_argument("--workers", type=_positive_int, default=None, help="Worker threads")
    verify.add_argument(
        "--born-rank-divisor",
        action="store_true",
        default=None,
        help="Divide Born probabilities by the projector rank (literal postulate reading)"
    )

    # spectral
    spectral = subparsers.add_parser(
        "spectral", parents=[common], help="Spectral decomposition of an operator JSON file"
    )
    spectral.add_argument("--input", required=True, help="Operator JSON ({n, S, A} or {re, im})")
    spectral.add_argument(
        "--method",
        default="structured",
        choices=SolverRegistry.list_types(),
        help="Solver. Default: structured"
    )

    # correlate
    correlate = subparsers.add_parser(
        "correlate", parents=[common], help="Evaluate <L_1 ... L_k psi, phi> from a query file"
    )
    correlate.add_argument("--query", "--input", dest="query", required=True, help="Correlation query JSON")

    # measure
    measure = subparsers.add_parser(
        "measure", parents=[common], help="Born-rule outcome distribution of an observable in a state"
    )
    measure.add_argument("--state", required=True, help="State JSON ({n, q, p} or {re, im})")
    measure.add_argument("--operator", required=True, help="Observable JSON ({n, S, A} or {re, im})")
    measure.add_argument(
        "--method",
        default="structured",
        choices=SolverRegistry.list_types(),
        help="Solver. Default: structured"
    )
    measure.add_argument(
        "--born-rank-divisor",
        action="store_true",
        help="Divide probabilities by the projector rank (literal postulate reading)"
    )

    # simulate
    simulate = subparsers.add_parser(
        "simulate", parents=[common], help="Sample measurements of a two-qubit register"
    )
    simulate.add_argument("system", choices=["bell"], help="System to simulate")
    simulate.add_argument("--shots", type=_unsigned_int, default=1000, help="Number of shots. Default: 1000")
    simulate.add_argument("--seed", type=_unsigned_int, default=1, help="Unsigned seed. Default: 1")
    simulate.add_argument("--state", default=None, help="Register state JSON (default: the Bell state)")

    # group
    group = subparsers.add_parser(
        "group", parents=[common], help="Group membership of a real 2n x 2n matrix"
    )
    group.add_argument("action", choices=["check"], help="Group action")
    group.add_argument("--input", required=True, help="Matrix JSON ({matrix: [[...]]} or a bare array)")

    # bench
    bench = subparsers.add_parser(
        "bench", parents=[common], help="Time the structured solver against the dense solver"
    )
    bench.add_argument(
        "--dims",
        type=parse_dims,
        default=[2, 4, 8, 16, 32, 64],
        help="Comma-separated complex dimensions. Default: 2,4,8,16,32,64"
    )
    bench.add_argument("--trials", type=_positive_int, default=3, help="Instances per dimension. Default: 3")
    bench.add_argument("--seed", type=_unsigned_int, default=1, help="Unsigned seed. Default: 1")

    # listings
    subparsers.add_parser("list-suites", parents=[common], help="List verification suites and exit")
    subparsers.add_parser("list-profiles", parents=[common], help="List verification profiles and exit")

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        argv: Argument list (default: sys.argv[1:])

    Returns:
        Parsed arguments namespace
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.command == "verify" and args.dims is not None and not args.dims:
        parser.error("--dims must name at least one dimension for verify")

    if args.command == "verify" and args.tol is not None and args.tol <= 0:
        parser.error("--tol must be positive")

    return args
