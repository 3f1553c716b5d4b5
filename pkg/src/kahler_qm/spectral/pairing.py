"""
Eigenvalue clustering, sign fixing and J-paired orthonormalization.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.errors import StructureError
from ..core.kahler import KahlerVector, apply_J
from ..core.operators import KahlerOperator

JPair = Tuple[KahlerVector, KahlerVector]

# Relative size below which a Gram-Schmidt remainder or singular value counts as zero.
RANK_RTOL = 1e-8


def cluster_eigenvalues(values: np.ndarray, threshold: float) -> List[List[int]]:
    """
    Group ascending eigenvalues into clusters.

    Consecutive values whose gap is at most `threshold` share a cluster, so
    a cluster is a maximal chain of close values.

    Args:
        values: Eigenvalues sorted ascending
        threshold: Largest gap that still merges two neighbours

    Returns:
        List of index lists, one per cluster, in ascending order
    """
    if len(values) == 0:
        return []
    clusters: List[List[int]] = [[0]]
    for idx in range(1, len(values)):
        if values[idx] - values[idx - 1] <= threshold:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    return clusters


def canonical_phase(w: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Rotate a complex vector so its first significant entry is real and positive.

    After gamma_inv the first coordinate above the noise floor, in q-then-p
    order, is then positive.
    """
    magnitudes = np.abs(w)
    floor = tolerances.bound(float(magnitudes.max()))
    first = int(np.argmax(magnitudes > floor))
    return w * (np.conj(w[first]) / magnitudes[first])


def canonical_sign(stacked: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Flip a real stacked vector so its first significant coordinate is positive."""
    magnitudes = np.abs(stacked)
    floor = tolerances.bound(float(magnitudes.max()))
    first = int(np.argmax(magnitudes > floor))
    return -stacked if stacked[first] < 0 else stacked


def orthonormalize_J_paired(
    vectors: Sequence[KahlerVector],
    L: KahlerOperator,
    eigenvalue: float,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    residual_bound: Optional[float] = None,
) -> List[JPair]:
    """
    Turn a spanning set of one eigenspace into an orthonormal basis of J-pairs.

    Picks v1, adjoins Jv1, projects the remaining inputs off span{v1, Jv1}
    and repeats. The span built so far is J-invariant, so each new Jv is
    automatically orthogonal to it.

    Args:
        vectors: Eigenvectors of L for `eigenvalue`
        L: The operator they belong to
        eigenvalue: Their common eigenvalue
        tolerances: Numerical tolerances
        residual_bound: Allowed ||L v - lambda v|| per unit vector
            (default: the clustering threshold for L)

    Returns:
        List of (v, Jv) pairs with g(v_i, v_j) = delta_ij and g(v_i, Jv_j) = 0

    Raises:
        StructureError: If an input is not an eigenvector, or the inputs span
            a space that is not J-invariant (e.g. odd dimension)
    """
    if not vectors:
        return []
    norm = L.frobenius_norm()
    if residual_bound is None:
        residual_bound = tolerances.cluster_threshold(norm)
    matrix = L.matrix()

    stacked = np.column_stack([v.stacked() for v in vectors])
    lengths = np.linalg.norm(stacked, axis=0)
    residuals = np.linalg.norm(matrix @ stacked - eigenvalue * stacked, axis=0)
    worst = int(np.argmax(residuals / np.maximum(lengths, np.finfo(float).tiny)))
    if lengths[worst] > 0 and residuals[worst] > residual_bound * lengths[worst]:
        raise StructureError(
            f"Input vector {worst} is not an eigenvector for eigenvalue {eigenvalue:.12g}",
            float(residuals[worst] / lengths[worst]), residual_bound,
        )

    basis = np.zeros((stacked.shape[0], 0))
    pairs: List[JPair] = []
    for column, length in zip(stacked.T, lengths):
        if length == 0.0:
            continue
        remainder = column.copy()
        for _ in range(2):
            remainder -= basis @ (basis.T @ remainder)
        size = float(np.linalg.norm(remainder))
        if size <= RANK_RTOL * length:
            continue
        v = KahlerVector.from_stacked(canonical_sign(remainder / size, tolerances))
        jv = apply_J(v)
        pairs.append((v, jv))
        basis = np.column_stack([basis, v.stacked(), jv.stacked()])

    singular = np.linalg.svd(stacked, compute_uv=False)
    rank = int(np.sum(singular > RANK_RTOL * singular[0])) if singular[0] > 0 else 0
    if rank != 2 * len(pairs):
        raise StructureError(
            f"Input vectors span a {rank}-dimensional space, which is not a sum of "
            f"J-pairs ({len(pairs)} pairs found)"
        )
    return pairs


def projector_from_pairs(pairs: Sequence[JPair]) -> np.ndarray:
    """E = sum over pairs of v v^T + (Jv)(Jv)^T."""
    if not pairs:
        raise ValueError("Need at least one pair to build a projector")
    columns = np.column_stack([vec.stacked() for pair in pairs for vec in pair])
    return columns @ columns.T


def projectors_from_pairs(grouped_pairs: Sequence[Sequence[JPair]]) -> List[np.ndarray]:
    """
    Build one projector per eigenvalue from its orthonormal J-pairs.

    Args:
        grouped_pairs: For each eigenvalue, the list of its (v, Jv) pairs

    Returns:
        List of real 2n x 2n projectors, symmetric, idempotent and J-commuting
    """
    return [projector_from_pairs(pairs) for pairs in grouped_pairs]
