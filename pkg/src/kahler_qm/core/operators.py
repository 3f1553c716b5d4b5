"""
Real operators on K^{2n} that commute with J.

Every such operator has the block form [[S, -A], [A, S]]. It is
K-Hermitian when S is symmetric and A antisymmetric; lifts of unitaries and
general complex matrices keep the block form but not the symmetry.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatchError, StructureError
from .kahler import KahlerVector


def _frozen_square(values: Any, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"'{name}' must be a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise ValueError(f"'{name}' must be at least 1x1")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"'{name}' contains non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False, init=False)
class KahlerOperator:
    """
    A J-commuting real operator stored as its (S, A) blocks.

    The expanded matrix is [[S, -A], [A, S]], the real image of the complex
    matrix S + iA.

    Example:
        sigma_y = KahlerOperator(np.zeros((2, 2)), [[0, -1], [1, 0]])
        sigma_y.is_k_hermitian()  # True
    """
    S: np.ndarray
    A: np.ndarray

    def __init__(self, S: Any, A: Any):
        S_arr = _frozen_square(S, "S")
        A_arr = _frozen_square(A, "A")
        if S_arr.shape != A_arr.shape:
            raise DimensionMismatchError(S_arr.shape[0], A_arr.shape[0], "S and A blocks")
        object.__setattr__(self, "S", S_arr)
        object.__setattr__(self, "A", A_arr)

    @property
    def n(self) -> int:
        return int(self.S.shape[0])

    @classmethod
    def hermitian(
        cls, S: Any, A: Any, tolerances: Tolerances = DEFAULT_TOLERANCES
    ) -> "KahlerOperator":
        """Construct and validate a K-Hermitian operator."""
        op = cls(S, A)
        op.require_k_hermitian(tolerances)
        return op

    @classmethod
    def identity(cls, n: int) -> "KahlerOperator":
        return cls(np.eye(n), np.zeros((n, n)))

    @classmethod
    def from_matrix(
        cls, matrix: Any, tolerances: Tolerances = DEFAULT_TOLERANCES
    ) -> "KahlerOperator":
        """
        Read the blocks off a 2n x 2n real matrix.

        Raises:
            StructureError: If the matrix does not commute with J, i.e. the
                diagonal blocks differ or the off-diagonal blocks are not negatives
        """
        M = np.asarray(matrix, dtype=np.float64)
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2 != 0:
            raise ValueError(f"Expected a square matrix of even size, got shape {M.shape}")
        n = M.shape[0] // 2
        top_left, top_right = M[:n, :n], M[:n, n:]
        bottom_left, bottom_right = M[n:, :n], M[n:, n:]

        bound = tolerances.bound(max(1.0, float(np.linalg.norm(M))))
        diag_residual = float(np.linalg.norm(top_left - bottom_right))
        if diag_residual > bound:
            raise StructureError(
                "Matrix does not commute with J: S-blocks differ (X11 != X22)",
                diag_residual, bound,
            )
        off_residual = float(np.linalg.norm(top_right + bottom_left))
        if off_residual > bound:
            raise StructureError(
                "Matrix does not commute with J: off-diagonal blocks are not negatives (X12 != -X21)",
                off_residual, bound,
            )
        return cls(top_left, bottom_left)

    def matrix(self) -> np.ndarray:
        """The expanded 2n x 2n block matrix."""
        return np.block([[self.S, -self.A], [self.A, self.S]])

    def complex_matrix(self) -> np.ndarray:
        return self.S + 1j * self.A

    def symmetry_residuals(self) -> Dict[str, float]:
        """Frobenius norms of S - S^T and A + A^T."""
        return {
            "S_symmetric": float(np.linalg.norm(self.S - self.S.T)),
            "A_antisymmetric": float(np.linalg.norm(self.A + self.A.T)),
        }

    def is_k_hermitian(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
        bound = tolerances.bound(max(1.0, self.frobenius_norm()))
        return all(r <= bound for r in self.symmetry_residuals().values())

    def require_k_hermitian(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        """
        Raise StructureError unless S^T = S and A^T = -A within tolerance.
        """
        bound = tolerances.bound(max(1.0, self.frobenius_norm()))
        for name, residual in self.symmetry_residuals().items():
            if residual > bound:
                raise StructureError(f"Operator is not K-Hermitian: {name} fails", residual, bound)

    def frobenius_norm(self) -> float:
        """Frobenius norm of the expanded 2n x 2n matrix."""
        return float(np.sqrt(2.0 * (np.sum(self.S ** 2) + np.sum(self.A ** 2))))

    def apply(self, x: KahlerVector) -> KahlerVector:
        """(q, p) -> (S q - A p, A q + S p)."""
        if x.n != self.n:
            raise DimensionMismatchError(self.n, x.n, "operator and vector")
        return KahlerVector(self.S @ x.q - self.A @ x.p, self.A @ x.q + self.S @ x.p)

    def __matmul__(self, other: "KahlerOperator") -> "KahlerOperator":
        if not isinstance(other, KahlerOperator):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(self.n, other.n, "operators")
        return KahlerOperator(
            self.S @ other.S - self.A @ other.A,
            self.S @ other.A + self.A @ other.S,
        )

    def transpose(self) -> "KahlerOperator":
        """Matrix transpose; the real image of the adjoint."""
        return KahlerOperator(self.S.T, -self.A.T)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KahlerOperator":
        """
        Parse the JSON operator format {"n": int, "S": [[...]], "A": [[...]]}.
        """
        if not isinstance(data, dict):
            raise ValueError(f"Kähler operator must be a JSON object, got {type(data).__name__}")
        for key in ("n", "S", "A"):
            if key not in data:
                raise ValueError(f"Kähler operator is missing '{key}' field")
        op = cls(data["S"], data["A"])
        if op.n != int(data["n"]):
            raise ValueError(f"Kähler operator declares n={data['n']} but blocks are {op.n}x{op.n}")
        return op

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "S": self.S.tolist(), "A": self.A.tolist()}
