"""
Spectral theory of K-Hermitian operators with pluggable solvers.

Solvers register themselves with SolverRegistry on import:
- structured:  n x n complex Hermitian solve of S + iA
- dense:       2n x 2n real symmetric solve, pairing recovered afterwards
- closed-form: explicit formulas for n = 1 and n = 2

Example:
    from kahler_qm.spectral import decompose

    result = decompose(L, method="structured")
    result.eigenvalues, result.multiplicities
"""

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.operators import KahlerOperator
from .base import BaseSolver
from .closed_form import (
    ClosedFormSolver,
    K4Parameters,
    closed_form_eigenvectors_n2,
    eigen_closed_form_n1,
    eigen_closed_form_n2,
    unpaired_basis_n2,
    repaired_basis_n2,
)
from .decomposition import FrameSplit, SpectralDecomposition
from .dense import DenseSolver
from .pairing import (
    cluster_eigenvalues,
    orthonormalize_J_paired,
    projector_from_pairs,
    projectors_from_pairs,
)
from .registry import SolverRegistry
from .structured import StructuredSolver

__all__ = [
    "BaseSolver",
    "SolverRegistry",
    "StructuredSolver",
    "DenseSolver",
    "ClosedFormSolver",
    "SpectralDecomposition",
    "FrameSplit",
    "K4Parameters",
    "closed_form_eigenvectors_n2",
    "eigen_closed_form_n1",
    "eigen_closed_form_n2",
    "unpaired_basis_n2",
    "repaired_basis_n2",
    "cluster_eigenvalues",
    "orthonormalize_J_paired",
    "projector_from_pairs",
    "projectors_from_pairs",
    "decompose",
    "eigen_structured",
]


def decompose(
    L: KahlerOperator, method: str = "structured", tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SpectralDecomposition:
    """Validate L and decompose it with the named solver."""
    return SolverRegistry.create(method, tolerances).decompose(L)


def eigen_structured(
    L: KahlerOperator, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SpectralDecomposition:
    return decompose(L, "structured", tolerances)
