"""
Structured solver: the n x n complex Hermitian problem for S + iA.
"""

import numpy as np
import scipy.linalg

from ..core.correspondence import gamma_inv
from ..core.hilbert import ComplexState
from ..core.kahler import apply_J
from ..core.operators import KahlerOperator
from .base import BaseSolver
from .decomposition import SpectralDecomposition
from .pairing import canonical_phase, cluster_eigenvalues
from .registry import SolverRegistry


@SolverRegistry.register
class StructuredSolver(BaseSolver):
    """
    Solve S + iA with a complex Hermitian eigensolver and emit real J-pairs.

    Each complex eigenvector w gives the pair v = gamma_inv(w), Jv, so every
    multiplicity is even by construction and the work is an n x n complex
    solve instead of a 2n x 2n real one.
    """

    solver_type = "structured"

    def solve(self, L: KahlerOperator) -> SpectralDecomposition:
        values, vectors = scipy.linalg.eigh(L.complex_matrix())
        threshold = self.tolerances.cluster_threshold(L.frobenius_norm())

        eigenvalues = []
        grouped = []
        for cluster in cluster_eigenvalues(values, threshold):
            eigenvalues.append(float(np.mean(values[cluster])))
            pairs = []
            for idx in cluster:
                v = gamma_inv(ComplexState(canonical_phase(vectors[:, idx], self.tolerances)))
                pairs.append((v, apply_J(v)))
            grouped.append(pairs)
        return self._assemble(L, eigenvalues, grouped)
