"""
CLI command implementations.

Every command writes exactly one JSON document to stdout (or --out) and
returns an exit code.
"""

import json
import sys
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, Optional

from ..core.config import Tolerances
from ..core.correspondence import gamma_inv, lift_operator
from ..core.hilbert import ComplexOperator, ComplexState
from ..core.kahler import KahlerVector
from ..core.operators import KahlerOperator
from ..groups import GroupElement, matrix_from_json
from ..profiles import ProfileLoader, list_builtin_profiles
from ..quantum import CorrelationQuery, born_probabilities, correlation, simulate_bell
from ..spectral import decompose
from ..utils.files import read_json, write_output
from ..utils.progress import ProgressTracker
from ..verification import SuiteRegistry, run_bench, run_suite
from ..verification.runner import ALL_SUITES


def _emit(document: Any, out: Optional[str]) -> None:
    write_output(json.dumps(document, indent=2, sort_keys=True), Path(out) if out else None)


def load_operator(data: Dict[str, Any]) -> KahlerOperator:
    """{"n", "S", "A"} as is, {"re", "im"} lifted."""
    if isinstance(data, dict) and "S" in data:
        return KahlerOperator.from_dict(data)
    return lift_operator(ComplexOperator.from_dict(data))


def load_state(data: Dict[str, Any]) -> KahlerVector:
    """{"n", "q", "p"} as is, {"re", "im"} through gamma_inv."""
    if isinstance(data, dict) and "q" in data:
        return KahlerVector.from_dict(data)
    return gamma_inv(ComplexState.from_dict(data))


def verify_command(args: Namespace, progress: ProgressTracker) -> int:
    """
    Run a suite under a profile with command-line overrides.

    Returns:
        0 if every check passed, 1 otherwise
    """
    profile = ProfileLoader().load(args.profile)
    progress.step(f"Profile: {args.profile}")

    overrides = {"dims": args.dims, "trials": args.trials, "tol": args.tol}
    overrides = {k: v for k, v in overrides.items() if v is not None}
    names = SuiteRegistry.list_names() if args.suite == ALL_SUITES else [args.suite]
    profile = profile.merge_with({
        "seed": args.seed,
        "workers": args.workers,
        "born_rank_divisor": args.born_rank_divisor,
        "suites": {name: overrides for name in names} if overrides else None,
    })

    report = run_suite(args.suite, profile, progress)
    write_output(report.to_json(), Path(args.out) if args.out else None)
    if not report.passed:
        failing = ", ".join(progress.failed_suites) or args.suite
        print(f"Verification FAILED: {failing} (max residual {report.max_residual:.3e})", file=sys.stderr)
        return 1
    progress.step(f"Verification passed: {args.suite}")
    return 0


def spectral_command(args: Namespace, progress: ProgressTracker) -> int:
    L = load_operator(read_json(Path(args.input)))
    progress.step(f"Decomposing n={L.n} operator with {args.method}")
    result = decompose(L, args.method, Tolerances())
    document = result.to_dict()
    document["method"] = result.method
    _emit(document, args.out)
    return 0


def correlate_command(args: Namespace, progress: ProgressTracker) -> int:
    query = CorrelationQuery.from_dict(read_json(Path(args.query)))
    progress.step(f"Correlation chain of {len(query.operators)} operator(s), n={query.n}")
    result = correlation(query)
    _emit(result.to_dict(), args.out)
    return 0


def measure_command(args: Namespace, progress: ProgressTracker) -> int:
    eta = load_state(read_json(Path(args.state)))
    L = load_operator(read_json(Path(args.operator)))
    outcomes = born_probabilities(eta, L, args.born_rank_divisor, args.method)
    progress.step(f"{len(outcomes)} outcome(s)")
    _emit(
        {
            "rank_divisor": args.born_rank_divisor,
            "outcomes": [o.to_dict() for o in outcomes],
        },
        args.out,
    )
    return 0


def simulate_bell_command(args: Namespace, progress: ProgressTracker) -> int:
    eta = load_state(read_json(Path(args.state))) if args.state else None
    progress.step(f"Sampling {args.shots} shots (seed {args.seed})")
    result = simulate_bell(args.shots, args.seed, eta)
    _emit(result.to_dict(), args.out)
    return 0


def group_check_command(args: Namespace, progress: ProgressTracker) -> int:
    element = GroupElement.verified(matrix_from_json(read_json(Path(args.input))))
    progress.step(f"Memberships: {', '.join(sorted(element.claimed_memberships)) or '(none)'}")
    _emit(element.to_dict(), args.out)
    return 0


def bench_command(args: Namespace, progress: ProgressTracker) -> int:
    records = run_bench(args.dims, args.trials, args.seed, progress=progress)
    _emit([r.to_dict() for r in records], args.out)
    return 0


def list_suites_command(args: Namespace, progress: ProgressTracker) -> int:
    """
    Print the registered suites with their defaults.

    Returns:
        Exit code (0 for success)
    """
    info = SuiteRegistry.get_info()
    _emit(
        {name: {k: v for k, v in meta.items() if k != "class"} for name, meta in info.items()},
        args.out,
    )
    return 0


def list_profiles_command(args: Namespace, progress: ProgressTracker) -> int:
    """
    Print the available profiles and their sources.

    Returns:
        Exit code (0 for success)
    """
    available = ProfileLoader().list_available()
    print(f"Built-in profiles: {', '.join(list_builtin_profiles())}", file=sys.stderr)
    print(
        "Usage:\n"
        "  --profile <name>              # Built-in profile\n"
        "  --profile profiles/<file>     # File in profiles/ directory\n"
        "  --profile <file>:name         # Named profile in multi-profile file",
        file=sys.stderr,
    )
    _emit(available, args.out)
    return 0
