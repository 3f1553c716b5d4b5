"""
Progress reporting for verification runs and CLI commands.

Messages go to stderr so stdout stays a single JSON document. Each line
carries the time since the tracker started and, inside a suite, the time
since that suite started.
"""

import sys
import time
from typing import List, Optional, Sequence, TextIO


class ProgressTracker:
    """
    Timestamped progress lines for suites, dimensions and free-form steps.

    Example:
        progress = ProgressTracker()
        progress.suite_started("axioms", [1, 2, 4], trials=100, tol=1e-12)
        progress.dimension_done("axioms", 1, trials=100)
        progress.suite_finished("axioms", passed=True, max_residual=4.4e-16)
    """

    def __init__(self, enabled: bool = True, output: Optional[TextIO] = None):
        """
        Args:
            enabled: Whether to print anything at all
            output: Stream to write to (default: the current sys.stderr)
        """
        self.enabled = enabled
        self.output = output
        self._start_time = time.time()
        self._suite_start: Optional[float] = None
        self.failed_suites: List[str] = []

    def step(self, message: str) -> None:
        """Log one line prefixed with the total elapsed time."""
        if not self.enabled:
            return
        elapsed = time.time() - self._start_time
        print(f"[{elapsed:6.1f}s] {message}", file=self.output or sys.stderr)

    def suite_started(self, name: str, dims: Sequence[int], trials: int, tol: float) -> None:
        self._suite_start = time.time()
        self.step(f"Running {name}: dims={list(dims)} trials={trials} tol={tol:g}")

    def dimension_done(self, name: str, n: int, trials: int) -> None:
        """All trials of one dimension have been folded into the report."""
        self.step(f"{name}: n={n} done ({trials} trials{self._suite_elapsed()})")

    def suite_finished(self, name: str, passed: bool, max_residual: float) -> None:
        """
        Log the verdict of a suite and remember failures.

        `failed_suites` lets `--suite all` name every failing suite at the end.
        """
        status = "passed" if passed else "FAILED"
        if not passed:
            self.failed_suites.append(name)
        self.step(f"{name}: {status} (max residual {max_residual:.3e}{self._suite_elapsed()})")
        self._suite_start = None

    def _suite_elapsed(self) -> str:
        if self._suite_start is None:
            return ""
        return f", {time.time() - self._suite_start:.1f}s in suite"
