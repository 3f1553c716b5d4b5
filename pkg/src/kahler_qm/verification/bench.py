"""
Timing of the structured n x n solve against the dense 2n x 2n solve.
"""

import time
from typing import List, Optional, Sequence

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..spectral import SolverRegistry
from ..utils.progress import ProgressTracker
from .report import BenchRecord
from .sampling import random_k_hermitian, trial_rng

BENCH_METHODS = ("structured", "dense")


def run_bench(
    dims: Sequence[int],
    trials: int = 3,
    seed: int = 1,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    progress: Optional[ProgressTracker] = None,
) -> List[BenchRecord]:
    """
    Decompose identical random K-Hermitian operators with both solvers.

    Both methods are scored by the same reference, the relative
    reconstruction residual ||sum lambda_i E_i - L||_F / ||L||_F. Residuals
    are reproducible for a given seed; wall times are not.

    Args:
        dims: Complex dimensions (empty gives an empty list)
        trials: Instances per dimension
        seed: Unsigned seed

    Returns:
        One BenchRecord per (n, method), in dims order
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    records: List[BenchRecord] = []
    for n in dims:
        if n < 1:
            raise ValueError(f"Bench dimensions must be positive, got {n}")
        operators = [random_k_hermitian(trial_rng(seed, "bench", n, t), n) for t in range(trials)]
        for method in BENCH_METHODS:
            solver = SolverRegistry.create(method, tolerances)
            elapsed = 0.0
            worst = 0.0
            for L in operators:
                start = time.perf_counter()
                result = solver.decompose(L)
                elapsed += time.perf_counter() - start
                worst = max(worst, result.invariant_residuals(L)["reconstruction"])
            records.append(BenchRecord(n=n, method=method, wall_time=elapsed / trials, residual=worst))
            if progress is not None:
                progress.step(f"bench n={n} {method}: {elapsed / trials * 1e3:.2f} ms/solve")
    return records
