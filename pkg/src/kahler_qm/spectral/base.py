"""
Base solver class and interfaces.

This module defines the abstract base class that every eigensolver inherits from.
"""

from abc import ABC, abstractmethod
from typing import List, Sequence

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.operators import KahlerOperator
from .decomposition import SpectralDecomposition
from .pairing import JPair, projectors_from_pairs


class BaseSolver(ABC):
    """
    Abstract base class for spectral solvers of K-Hermitian operators.

    To create a new solver:
    1. Subclass BaseSolver
    2. Set the solver_type class variable
    3. Implement solve()
    4. Decorate with @SolverRegistry.register

    Example:
        @SolverRegistry.register
        class MySolver(BaseSolver):
            solver_type = "mine"

            def solve(self, L):
                ...
    """

    # Subclasses must set this to register the solver
    solver_type: str = ""

    def __init__(self, tolerances: Tolerances = DEFAULT_TOLERANCES):
        """
        Initialize solver.

        Args:
            tolerances: Clustering and validation tolerances
        """
        self.tolerances = tolerances

    def decompose(self, L: KahlerOperator) -> SpectralDecomposition:
        """
        Validate the operator and decompose it.

        Raises:
            StructureError: If L is not K-Hermitian
            RuntimeError: If the underlying LAPACK routine fails to converge
        """
        L.require_k_hermitian(self.tolerances)
        try:
            return self.solve(L)
        except np.linalg.LinAlgError as e:
            raise RuntimeError(f"{self.solver_type} eigensolver failed: {e}") from e

    @abstractmethod
    def solve(self, L: KahlerOperator) -> SpectralDecomposition:
        """
        Decompose an already validated operator.

        Args:
            L: K-Hermitian operator

        Returns:
            SpectralDecomposition with every invariant holding within tolerance
        """
        pass

    def _assemble(
        self, L: KahlerOperator, eigenvalues: Sequence[float], grouped_pairs: List[List[JPair]]
    ) -> SpectralDecomposition:
        return SpectralDecomposition(
            n=L.n,
            eigenvalues=np.asarray(eigenvalues, dtype=np.float64),
            multiplicities=[2 * len(pairs) for pairs in grouped_pairs],
            projectors=projectors_from_pairs(grouped_pairs),
            pairs=grouped_pairs,
            method=self.solver_type,
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(tolerances={self.tolerances})"
