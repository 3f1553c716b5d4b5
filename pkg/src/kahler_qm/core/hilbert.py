"""
Complex-side values: states in C^n and tagged n x n matrices.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import StructureError

OPERATOR_KINDS = ("hermitian", "unitary", "projector", "general")


@dataclass(frozen=True, eq=False, init=False)
class ComplexState:
    """
    A vector psi in C^n.

    Attributes:
        entries: Complex amplitudes, length n
    """
    entries: np.ndarray

    def __init__(self, entries: Any):
        arr = np.array(entries, dtype=np.complex128)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError(f"Complex state must be a non-empty 1-D array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Complex state contains non-finite entries")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return int(self.entries.size)

    @classmethod
    def basis(cls, n: int, index: int) -> "ComplexState":
        unit = np.zeros(n, dtype=np.complex128)
        unit[index] = 1.0
        return cls(unit)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.entries) ** 2))

    def normalized(self) -> "ComplexState":
        norm = np.sqrt(self.norm_sq())
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero vector")
        return ComplexState(self.entries / norm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexState):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ComplexState":
        """Parse {"re": [...], "im": [...]} ("im" defaults to zeros)."""
        if not isinstance(data, dict) or "re" not in data:
            raise ValueError("Complex state must be a JSON object with a 're' field")
        re = np.asarray(data["re"], dtype=np.float64)
        im = np.asarray(data.get("im", np.zeros_like(re)), dtype=np.float64)
        if re.shape != im.shape:
            raise ValueError(f"'re' and 'im' shapes differ: {re.shape} vs {im.shape}")
        return cls(re + 1j * im)

    def to_dict(self) -> Dict[str, Any]:
        return {"re": self.entries.real.tolist(), "im": self.entries.imag.tolist()}


def kind_residual(matrix: np.ndarray, kind: str) -> float:
    """
    Violation of the defining identity of `kind`, as a Frobenius norm.

    hermitian: M - M^dagger; unitary: M^dagger M - I;
    projector: max of (M^2 - M) and (M - M^dagger); general: 0.
    """
    adjoint = matrix.conj().T
    if kind == "hermitian":
        return float(np.linalg.norm(matrix - adjoint))
    if kind == "unitary":
        return float(np.linalg.norm(adjoint @ matrix - np.eye(matrix.shape[0])))
    if kind == "projector":
        return max(
            float(np.linalg.norm(matrix @ matrix - matrix)),
            float(np.linalg.norm(matrix - adjoint)),
        )
    if kind == "general":
        return 0.0
    raise ValueError(f"Unknown operator kind '{kind}'. Available: {', '.join(OPERATOR_KINDS)}")


@dataclass(frozen=True, eq=False, init=False)
class ComplexOperator:
    """
    An n x n complex matrix tagged with its kind.

    The tag is checked at construction: hermitian requires M = M^dagger,
    unitary M^dagger M = I, projector M^2 = M = M^dagger.
    """
    entries: np.ndarray
    kind: str

    def __init__(self, entries: Any, kind: str = "general", tolerances: Tolerances = DEFAULT_TOLERANCES):
        arr = np.array(entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"Complex operator must be a non-empty square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Complex operator contains non-finite entries")
        residual = kind_residual(arr, kind)
        bound = tolerances.bound(max(1.0, float(np.linalg.norm(arr))))
        if residual > bound:
            raise StructureError(f"Matrix is not {kind}", residual, bound)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "kind", kind)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ComplexOperator":
        """Parse {"re": [[...]], "im": [[...]], "kind": str}."""
        if not isinstance(data, dict) or "re" not in data:
            raise ValueError("Complex operator must be a JSON object with a 're' field")
        re = np.asarray(data["re"], dtype=np.float64)
        im = np.asarray(data.get("im", np.zeros_like(re)), dtype=np.float64)
        if re.shape != im.shape:
            raise ValueError(f"'re' and 'im' shapes differ: {re.shape} vs {im.shape}")
        return cls(re + 1j * im, kind=data.get("kind", "general"))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "re": self.entries.real.tolist(),
            "im": self.entries.imag.tolist(),
        }


# Pauli matrices, used throughout examples and tests.
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)
for _matrix in (SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY_2):
    _matrix.setflags(write=False)
