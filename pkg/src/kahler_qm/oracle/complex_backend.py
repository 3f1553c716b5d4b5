"""
Complex-Hilbert-space reference backend.

Every quantity the Kähler side computes has a direct complex counterpart
here. The functions use plain definitions (explicit sums, numpy's dense
Hermitian solver, np.kron) and never touch the real block structure, so
they serve as independent evidence in differential checks.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence, Tuple, Union

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.errors import DimensionMismatchError, NormalizationError, StructureError
from ..core.hilbert import ComplexOperator, ComplexState, kind_residual
from ..spectral.closed_form import K4Parameters, closed_form_eigenvectors_n2

MatrixLike = Union[ComplexOperator, np.ndarray]


@dataclass(frozen=True)
class OracleResult:
    """
    A reference value tagged with the computation that produced it.

    Attributes:
        value: Complex number, complex vector, or list of (eigenvalue, probability)
        computation: Name of the oracle operation, e.g. "inner" or "born"
    """
    value: Any
    computation: str


def _entries(op: MatrixLike) -> np.ndarray:
    if isinstance(op, ComplexOperator):
        return op.entries
    arr = np.asarray(op, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"Expected a square complex matrix, got shape {arr.shape}")
    return arr


def oracle_inner(psi1: ComplexState, psi2: ComplexState) -> complex:
    """sum_a conj(psi1_a) psi2_a by explicit summation."""
    if psi1.n != psi2.n:
        raise DimensionMismatchError(psi1.n, psi2.n, "complex states")
    total = 0j
    for a, b in zip(psi1.entries, psi2.entries):
        total += np.conj(a) * b
    return complex(total)


def oracle_eigen(
    H: MatrixLike, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Dense Hermitian eigendecomposition.

    For n = 2 the result is also checked against the closed-form eigenvalues
    and, away from a = 0, the closed-form eigenvectors.

    Returns:
        (eigenvalues ascending, eigenvectors as columns)

    Raises:
        StructureError: If H is not Hermitian within tolerance
        RuntimeError: If the n = 2 cross-check disagrees
    """
    M = _entries(H)
    scale = max(1.0, float(np.linalg.norm(M)))
    residual = kind_residual(M, "hermitian")
    if residual > tolerances.bound(scale):
        raise StructureError("Oracle eigensolve needs a Hermitian matrix", residual, tolerances.bound(scale))
    values, vectors = np.linalg.eigh(M)
    if M.shape[0] == 2:
        _cross_check_n2(M, values, vectors, tolerances)
    return values, vectors


def _cross_check_n2(
    M: np.ndarray, values: np.ndarray, vectors: np.ndarray, tolerances: Tolerances
) -> None:
    params = K4Parameters(
        s11=float(M[0, 0].real), s12=float(M[0, 1].real), s22=float(M[1, 1].real), a=float(M[0, 1].imag)
    )
    scale = max(1.0, float(np.linalg.norm(M)))
    bound = tolerances.cluster_threshold(scale)
    expected = np.array(params.eigenvalues())
    if np.max(np.abs(values - expected)) > bound:
        raise RuntimeError(f"Closed-form eigenvalues {expected} disagree with dense solve {values}")
    if params.is_singular(tolerances):
        return
    for column, v in zip(vectors.T, closed_form_eigenvectors_n2(params)):
        overlap = abs(np.vdot(v.q + 1j * v.p, column))
        if abs(overlap - 1.0) > np.sqrt(bound):
            raise RuntimeError(f"Closed-form eigenvector overlap {overlap:.12g} differs from 1")


def oracle_born(
    psi: ComplexState, H: MatrixLike, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> List[Tuple[float, float]]:
    """
    Born probabilities as squared magnitudes of eigenspace projections.

    Eigenvalues closer than the clustering threshold of the lifted operator
    are merged, so the outcome list lines up with the Kähler side.

    Returns:
        List of (eigenvalue, probability), eigenvalues ascending
    """
    norm_sq = float(np.sum(np.abs(psi.entries) ** 2))
    if abs(norm_sq - 1.0) > tolerances.normalization:
        raise NormalizationError(norm_sq, tolerances.normalization)
    M = _entries(H)
    if M.shape[0] != psi.n:
        raise DimensionMismatchError(M.shape[0], psi.n, "operator and state")
    values, vectors = oracle_eigen(M, tolerances)
    threshold = tolerances.cluster_threshold(np.sqrt(2.0) * float(np.linalg.norm(M)))
    weights = np.abs(vectors.conj().T @ psi.entries) ** 2

    outcomes: List[Tuple[float, float]] = []
    members: List[int] = [0]
    for idx in range(1, len(values) + 1):
        if idx < len(values) and values[idx] - values[idx - 1] <= threshold:
            members.append(idx)
            continue
        outcomes.append((float(np.mean(values[members])), float(np.sum(weights[members]))))
        members = [idx]
    return outcomes


def oracle_kron(psi1: ComplexState, psi2: ComplexState) -> ComplexState:
    """Direct Kronecker product."""
    return ComplexState(np.kron(psi1.entries, psi2.entries))


def oracle_correlation(ops: Sequence[MatrixLike], psi: ComplexState, phi: ComplexState) -> complex:
    """
    <L_1 ... L_k psi, phi>, applying L_k first.

    Raises:
        ValueError: If no operators are given
        DimensionMismatchError: If any dimension differs
    """
    if len(ops) == 0:
        raise ValueError("Correlation needs at least one operator (k >= 1)")
    if psi.n != phi.n:
        raise DimensionMismatchError(psi.n, phi.n, "correlation states")
    vec = psi.entries.copy()
    for op in reversed(list(ops)):
        M = _entries(op)
        if M.shape[0] != vec.size:
            raise DimensionMismatchError(M.shape[0], vec.size, "operator and state")
        vec = M @ vec
    return oracle_inner(ComplexState(vec), phi)


ORACLE_COMPUTATIONS: Dict[str, Callable[..., Any]] = {
    "inner": oracle_inner,
    "eigen": oracle_eigen,
    "born": oracle_born,
    "kron": oracle_kron,
    "correlation": oracle_correlation,
}


def run_oracle(computation: str, *args: Any, **kwargs: Any) -> OracleResult:
    """
    Run a named oracle computation and tag the result.

    Raises:
        ValueError: If the computation name is unknown
    """
    if computation not in ORACLE_COMPUTATIONS:
        available = ", ".join(sorted(ORACLE_COMPUTATIONS))
        raise ValueError(f"Unknown oracle computation: '{computation}'. Available: {available}")
    return OracleResult(value=ORACLE_COMPUTATIONS[computation](*args, **kwargs), computation=computation)
