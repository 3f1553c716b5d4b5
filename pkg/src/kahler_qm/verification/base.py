"""
Base verification suite and the trial loop shared by all suites.

A suite draws seeded random instances and returns one residual per named
check. Residuals from every (dimension, trial) pair are reduced by max, so
the report does not depend on the order in which trials finish.
"""

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, SuiteConfig, Tolerances
from ..utils.progress import ProgressTracker
from .report import CheckResult, VerificationReport
from .sampling import trial_rng


def flag(ok: bool) -> float:
    """Residual of a boolean check: 0 when it holds, 1 when it fails."""
    return 0.0 if ok else 1.0


def relative(residual: float, scale: float) -> float:
    return float(residual) / max(1.0, abs(float(scale)))


class BaseSuite(ABC):
    """
    Abstract base class for verification suites.

    To create a new suite:
    1. Subclass BaseSuite
    2. Set suite_name and the default_* class variables
    3. Implement run_trial()
    4. Decorate with @SuiteRegistry.register

    Example:
        @SuiteRegistry.register
        class AxiomSuite(BaseSuite):
            suite_name = "axioms"
            default_dims = (1, 2, 4)
            default_trials = 100
            default_tol = 1e-12

            def run_trial(self, rng, n):
                x = random_kahler_vector(rng, n)
                return {"j_squared": ...}
    """

    # Subclasses must set these to register the suite
    suite_name: str = ""
    default_dims: Tuple[int, ...] = (1, 2, 4)
    default_trials: int = 100
    default_tol: float = 1e-10

    def __init__(
        self,
        config: Optional[SuiteConfig] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        born_rank_divisor: bool = False,
    ):
        """
        Initialize suite.

        Args:
            config: Dimension, trial and tolerance overrides
            tolerances: Numerical tolerances passed to the library calls
            born_rank_divisor: Use the literal rank-divided Born rule
        """
        config = config or SuiteConfig()
        self.dims: List[int] = list(config.dims) if config.dims is not None else list(self.default_dims)
        self.trials: int = config.trials if config.trials is not None else self.default_trials
        self.tol: float = config.tol if config.tol is not None else self.default_tol
        self.tolerances = tolerances
        self.born_rank_divisor = born_rank_divisor
        self.validate()

    def validate(self) -> None:
        """
        Check dims and trials.

        Raises:
            ValueError: If trials < 1 or a dimension is invalid for this suite
        """
        if self.trials < 1:
            raise ValueError(f"Suite '{self.suite_name}' needs trials >= 1, got {self.trials}")
        if any(n < 1 for n in self.dims):
            raise ValueError(f"Suite '{self.suite_name}' dims must be positive, got {self.dims}")

    @abstractmethod
    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        """
        Run every check of the suite on one random instance.

        Args:
            rng: Generator owned by this trial
            n: Complex dimension

        Returns:
            Residual per check name; each must be <= tol for the suite to pass
        """
        pass

    def details(self) -> Dict[str, Any]:
        """Extra, non-residual findings to attach to the report."""
        return {}

    def run(
        self,
        seed: int,
        workers: int = 1,
        progress: Optional[ProgressTracker] = None,
    ) -> VerificationReport:
        """
        Run all trials and build the report.

        Args:
            seed: Unsigned master seed
            workers: Thread count; any value gives the same report
            progress: Optional tracker for per-dimension messages
        """
        tasks = [(n, trial) for n in self.dims for trial in range(self.trials)]

        def execute(task: Tuple[int, int]) -> Dict[str, float]:
            n, trial = task
            return self.run_trial(trial_rng(seed, self.suite_name, n, trial), n)

        worst: Dict[str, float] = {}
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results: Sequence[Dict[str, float]] = list(pool.map(execute, tasks))
        else:
            results = [execute(task) for task in tasks]

        for (n, trial), residuals in zip(tasks, results):
            for name, value in residuals.items():
                value = float(value)
                if np.isnan(value):
                    value = float("inf")
                worst[name] = max(worst.get(name, 0.0), value)
            if progress is not None and trial == self.trials - 1:
                progress.dimension_done(self.suite_name, n, self.trials)

        checks = [CheckResult(name, worst[name]) for name in sorted(worst)]
        return VerificationReport.from_checks(
            suite=self.suite_name,
            seed=seed,
            trials=self.trials,
            dimensions=list(self.dims),
            tolerance=self.tol,
            checks=checks,
            details=self.details(),
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dims={self.dims}, trials={self.trials}, tol={self.tol})"
