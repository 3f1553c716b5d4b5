"""
Dense solver: the expanded 2n x 2n real symmetric problem.

This is the baseline the structured solver is benchmarked against. It knows
nothing about J up front, so it has to recover the pairing afterwards.
"""

from typing import List

import numpy as np
import scipy.linalg

from ..core.errors import StructureError
from ..core.kahler import KahlerVector
from ..core.operators import KahlerOperator
from .base import BaseSolver
from .decomposition import SpectralDecomposition
from .pairing import cluster_eigenvalues, orthonormalize_J_paired
from .registry import SolverRegistry


@SolverRegistry.register
class DenseSolver(BaseSolver):
    """
    Solve the real symmetric 2n x 2n matrix, then J-pair each eigenspace.

    Clusters of odd size get one retry with a doubled threshold before the
    operator is reported as violating double degeneracy.
    """

    solver_type = "dense"

    def solve(self, L: KahlerOperator) -> SpectralDecomposition:
        values, vectors = scipy.linalg.eigh(L.matrix())
        norm = L.frobenius_norm()
        threshold = self.tolerances.cluster_threshold(norm)

        clusters = cluster_eigenvalues(values, threshold)
        if any(len(c) % 2 for c in clusters):
            threshold *= 2.0
            clusters = cluster_eigenvalues(values, threshold)
        odd = [c for c in clusters if len(c) % 2]
        if odd:
            spread = float(values[odd[0][-1]] - values[odd[0][0]])
            raise StructureError(
                f"Eigenvalue {values[odd[0][0]]:.12g} has odd multiplicity {len(odd[0])}",
                spread, threshold,
            )

        eigenvalues: List[float] = []
        grouped = []
        for cluster in clusters:
            lam = float(np.mean(values[cluster]))
            members = [KahlerVector.from_stacked(vectors[:, idx]) for idx in cluster]
            spread = float(np.max(np.abs(values[cluster] - lam)))
            grouped.append(
                orthonormalize_J_paired(
                    members, L, lam, self.tolerances,
                    residual_bound=spread + self.tolerances.bound(norm),
                )
            )
            eigenvalues.append(lam)
        return self._assemble(L, eigenvalues, grouped)
