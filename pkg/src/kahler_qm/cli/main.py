"""
Main CLI entry point.
"""

import sys
from typing import Callable, Dict, List, Optional

from ..utils.progress import ProgressTracker
from .args import parse_args
from .commands import (
    bench_command,
    correlate_command,
    group_check_command,
    list_profiles_command,
    list_suites_command,
    measure_command,
    simulate_bell_command,
    spectral_command,
    verify_command,
)

COMMANDS: Dict[str, Callable[..., int]] = {
    "verify": verify_command,
    "spectral": spectral_command,
    "correlate": correlate_command,
    "measure": measure_command,
    "simulate": simulate_bell_command,
    "group": group_check_command,
    "bench": bench_command,
    "list-suites": list_suites_command,
    "list-profiles": list_profiles_command,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Args:
        argv: Command-line arguments (default: sys.argv[1:])

    Returns:
        Exit code: 0 success, 1 failed checks or runtime error,
        2 missing input file, 130 interrupted
    """
    args = None
    try:
        args = parse_args(argv)
        progress = ProgressTracker(enabled=not args.quiet)
        return COMMANDS[args.command](args, progress)

    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130
    except FileNotFoundError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"ERROR: {e}", file=sys.stderr)
        if not (args is not None and args.quiet):
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
