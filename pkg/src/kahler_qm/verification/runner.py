"""
Run one suite or all of them under a verification profile.
"""

from typing import List, Optional

from ..core.config import ProfileConfig
from ..utils.progress import ProgressTracker
from .registry import SuiteRegistry
from .report import VerificationReport

ALL_SUITES = "all"


def suite_names() -> List[str]:
    """Registered suite names plus "all"."""
    return SuiteRegistry.list_names() + [ALL_SUITES]


def run_suite(
    name: str,
    profile: Optional[ProfileConfig] = None,
    progress: Optional[ProgressTracker] = None,
) -> VerificationReport:
    """
    Run a named suite with the settings of `profile`.

    Args:
        name: Suite name or "all"
        profile: Seed, workers and per-suite settings (default profile if None)
        progress: Optional progress tracker

    Returns:
        VerificationReport; for "all" the aggregate with nested suite reports

    Raises:
        ValueError: If the suite name is unknown or its settings are invalid
    """
    profile = profile or ProfileConfig()
    if name == ALL_SUITES:
        reports = [run_suite(suite, profile, progress) for suite in SuiteRegistry.list_names()]
        return VerificationReport.aggregate(profile.seed, reports)

    suite = SuiteRegistry.create(name, profile.suite(name), profile.tolerances, profile.born_rank_divisor)
    if progress is not None:
        progress.suite_started(name, suite.dims, suite.trials, suite.tol)
    report = suite.run(profile.seed, profile.workers, progress)
    if progress is not None:
        progress.suite_finished(name, report.passed, report.max_residual)
    return report
