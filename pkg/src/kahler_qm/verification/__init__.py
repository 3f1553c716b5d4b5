"""
Differential verification of the Kähler-side library against the complex oracle.

Example:
    from kahler_qm.verification import run_suite

    report = run_suite("axioms")
    print(report.to_json())
"""

from .base import BaseSuite
from .bench import BENCH_METHODS, run_bench
from .registry import SuiteRegistry
from .report import BenchRecord, CheckResult, VerificationReport
from .runner import ALL_SUITES, run_suite, suite_names
from .sampling import trial_rng

# Import suites to trigger registration
from . import suites  # noqa: F401

__all__ = [
    "BaseSuite",
    "SuiteRegistry",
    "BENCH_METHODS",
    "run_bench",
    "BenchRecord",
    "CheckResult",
    "VerificationReport",
    "ALL_SUITES",
    "run_suite",
    "suite_names",
    "trial_rng",
]


def list_suites():
    """Convenience function to list all registered suites."""
    return SuiteRegistry.list_names()


def get_suite_info():
    """Get information about all registered suites."""
    return SuiteRegistry.get_info()
