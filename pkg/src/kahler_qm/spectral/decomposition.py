"""
Spectral decomposition of a K-Hermitian operator.

A decomposition lists the distinct eigenvalues, their (even) real
multiplicities, the rank-2k projectors E_i in the original frame and the
orthonormal (v, Jv) pairs spanning each eigenspace.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from ..core.kahler import J_matrix
from ..core.operators import KahlerOperator
from .pairing import JPair


@dataclass
class FrameSplit:
    """
    The decomposition seen from its own eigenbasis.

    In the frame W = [v_1 ... v_n | Jv_1 ... Jv_n] the operator becomes
    diag(Lambda, Lambda) and each E_i splits as diag(P_i, 0) + diag(0, P_i).

    Attributes:
        frame: The Kähler-unitary matrix W (columns are the pair vectors)
        diagonal: Eigenvalue attached to each pair, length n
        block_projectors: For each eigenvalue, (diag(P_i, 0), diag(0, P_i))
    """
    frame: np.ndarray
    diagonal: np.ndarray
    block_projectors: List[Tuple[np.ndarray, np.ndarray]]

    def residuals(self, L: KahlerOperator) -> Dict[str, float]:
        """
        Frobenius residuals of the frame identities.

        Returns:
            Dictionary with keys
            frame_orthogonal (W^T W - I),
            frame_diagonalizes (W^T L W - diag(Lambda, Lambda)),
            block_exchange (max_i ||P1_i J - J P2_i||)
        """
        W = self.frame
        n = W.shape[0] // 2
        J = J_matrix(n)
        target = np.diag(np.concatenate([self.diagonal, self.diagonal]))
        exchange = max(
            float(np.linalg.norm(p1 @ J - J @ p2)) for p1, p2 in self.block_projectors
        )
        return {
            "frame_orthogonal": float(np.linalg.norm(W.T @ W - np.eye(2 * n))),
            "frame_diagonalizes": float(np.linalg.norm(W.T @ L.matrix() @ W - target)),
            "block_exchange": exchange,
        }


@dataclass
class SpectralDecomposition:
    """
    Result of a spectral solve.

    Attributes:
        n: Complex dimension of the operator
        eigenvalues: Distinct eigenvalues, ascending
        multiplicities: Real multiplicity of each eigenvalue (always even)
        projectors: Real 2n x 2n projector for each eigenvalue
        pairs: Orthonormal (v, Jv) pairs spanning each eigenspace
        method: Name of the solver that produced it
    """
    n: int
    eigenvalues: np.ndarray
    multiplicities: List[int]
    projectors: List[np.ndarray]
    pairs: List[List[JPair]] = field(repr=False)
    method: str = "structured"

    def reconstruct(self) -> np.ndarray:
        """sum_i lambda_i E_i."""
        total = np.zeros((2 * self.n, 2 * self.n))
        for lam, E in zip(self.eigenvalues, self.projectors):
            total += lam * E
        return total

    def expanded_eigenvalues(self) -> np.ndarray:
        """All 2n eigenvalues with multiplicity, ascending."""
        return np.repeat(self.eigenvalues, self.multiplicities)

    def invariant_residuals(self, L: KahlerOperator) -> Dict[str, float]:
        """
        Measure every decomposition invariant against the operator.

        Returns:
            Dictionary of Frobenius residuals. "reconstruction" is relative to
            ||L||_F; "parity" is 1.0 if some multiplicity is odd or they do
            not sum to 2n.
        """
        dim = 2 * self.n
        J = J_matrix(self.n)
        matrix = L.matrix()
        norm = max(L.frobenius_norm(), np.finfo(float).tiny)

        idempotent = symmetric = commuting = orthogonal = 0.0
        for i, E in enumerate(self.projectors):
            idempotent = max(idempotent, float(np.linalg.norm(E @ E - E)))
            symmetric = max(symmetric, float(np.linalg.norm(E - E.T)))
            commuting = max(commuting, float(np.linalg.norm(J @ E - E @ J)))
            for F in self.projectors[i + 1:]:
                orthogonal = max(orthogonal, float(np.linalg.norm(E @ F)))

        eigen = 0.0
        for lam, pairs in zip(self.eigenvalues, self.pairs):
            for v, jv in pairs:
                for vec in (v.stacked(), jv.stacked()):
                    eigen = max(eigen, float(np.linalg.norm(matrix @ vec - lam * vec)) / norm)

        parity_ok = all(m > 0 and m % 2 == 0 for m in self.multiplicities) and sum(
            self.multiplicities
        ) == dim
        return {
            "reconstruction": float(np.linalg.norm(self.reconstruct() - matrix)) / norm,
            "completeness": float(np.linalg.norm(sum(self.projectors) - np.eye(dim))),
            "idempotent": idempotent,
            "symmetric": symmetric,
            "orthogonal": orthogonal,
            "j_commuting": commuting,
            "eigen_residual": eigen,
            "parity": 0.0 if parity_ok else 1.0,
        }

    def frame_split(self) -> FrameSplit:
        """Rotate to the eigenbasis frame and split each E_i into its two blocks."""
        vs = [v.stacked() for pairs in self.pairs for v, _ in pairs]
        jvs = [jv.stacked() for pairs in self.pairs for _, jv in pairs]
        frame = np.column_stack(vs + jvs)
        diagonal = np.repeat(self.eigenvalues, [len(pairs) for pairs in self.pairs])

        zero = np.zeros((self.n, self.n))
        blocks = []
        start = 0
        for pairs in self.pairs:
            P = np.zeros((self.n, self.n))
            P[np.arange(start, start + len(pairs)), np.arange(start, start + len(pairs))] = 1.0
            start += len(pairs)
            blocks.append((np.block([[P, zero], [zero, zero]]), np.block([[zero, zero], [zero, P]])))
        return FrameSplit(frame=frame, diagonal=diagonal, block_projectors=blocks)

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: {"eigenvalues", "multiplicities", "projectors"}."""
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "multiplicities": [int(m) for m in self.multiplicities],
            "projectors": [E.tolist() for E in self.projectors],
        }
