"""
Membership tests for O(2n), Sp(2n, R), the J-commutant and the Kähler unitary group.

The Kähler unitary group consists of block matrices [[X, Y], [-Y, X]] with
M M^T = I. It equals Sp(2n, R) intersected with O(2n) and is the lift of U(n).
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.errors import StructureError
from ..core.kahler import J_matrix

MEMBERSHIPS = ("orthogonal", "symplectic", "j_commuting", "kahler_unitary")


def _square_even(M: Any) -> np.ndarray:
    arr = np.asarray(M, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"Group element must be a square matrix, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[0] % 2 != 0:
        raise ValueError(f"Group element must have even dimension 2n, got {arr.shape[0]}")
    return arr


def membership_bound(M: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Residual bound scaled by the matrix norm."""
    return tolerances.membership * max(1.0, float(np.linalg.norm(M)))


def membership_residuals(M: Any) -> Dict[str, float]:
    """
    Frobenius residual of each defining identity.

    Returns:
        orthogonal: M^T M - I
        symplectic: M^T J M - J
        j_commuting: M J - J M
        kahler_unitary: max of the block-form residuals and M M^T - I
    """
    arr = _square_even(M)
    n = arr.shape[0] // 2
    J = J_matrix(n)
    eye = np.eye(2 * n)
    block_form = max(
        float(np.linalg.norm(arr[:n, :n] - arr[n:, n:])),
        float(np.linalg.norm(arr[:n, n:] + arr[n:, :n])),
    )
    return {
        "orthogonal": float(np.linalg.norm(arr.T @ arr - eye)),
        "symplectic": float(np.linalg.norm(arr.T @ J @ arr - J)),
        "j_commuting": float(np.linalg.norm(arr @ J - J @ arr)),
        "kahler_unitary": max(block_form, float(np.linalg.norm(arr @ arr.T - eye))),
    }


def check_memberships(M: Any, tolerances: Tolerances = DEFAULT_TOLERANCES) -> FrozenSet[str]:
    """
    Which of MEMBERSHIPS hold for M within tolerance.

    Raises:
        ValueError: If M is not square of even dimension
    """
    arr = _square_even(M)
    bound = membership_bound(arr, tolerances)
    return frozenset(name for name, r in membership_residuals(arr).items() if r <= bound)


def symplectic_block_conditions(M: Any) -> Dict[str, float]:
    """
    Block identities for M = [[X, Y], [-Y, X]] in the Kähler unitary group.

    Returns:
        Residuals of X^T X + Y^T Y = I, X^T Y = Y^T X,
        X X^T + Y Y^T = I and X Y^T = Y X^T
    """
    arr = _square_even(M)
    n = arr.shape[0] // 2
    X, Y = arr[:n, :n], arr[:n, n:]
    eye = np.eye(n)
    return {
        "XtX_plus_YtY": float(np.linalg.norm(X.T @ X + Y.T @ Y - eye)),
        "XtY_symmetric": float(np.linalg.norm(X.T @ Y - Y.T @ X)),
        "XXt_plus_YYt": float(np.linalg.norm(X @ X.T + Y @ Y.T - eye)),
        "XYt_symmetric": float(np.linalg.norm(X @ Y.T - Y @ X.T)),
    }


@dataclass(frozen=True, eq=False, init=False)
class GroupElement:
    """
    A real 2n x 2n matrix together with the memberships it was verified for.

    Example:
        element = GroupElement(J_matrix(2), ["orthogonal", "symplectic"])
        element.claimed_memberships  # frozenset({'orthogonal', 'symplectic'})
    """
    M: np.ndarray
    claimed_memberships: FrozenSet[str]

    def __init__(
        self,
        M: Any,
        claimed_memberships: Iterable[str] = (),
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ):
        arr = _square_even(M).copy()
        claims = frozenset(claimed_memberships)
        unknown = claims - set(MEMBERSHIPS)
        if unknown:
            raise ValueError(
                f"Unknown memberships: {', '.join(sorted(unknown))}. "
                f"Available: {', '.join(MEMBERSHIPS)}"
            )
        bound = membership_bound(arr, tolerances)
        residuals = membership_residuals(arr)
        for name in sorted(claims):
            if residuals[name] > bound:
                raise StructureError(f"Matrix is not in the claimed group '{name}'", residuals[name], bound)
        arr.setflags(write=False)
        object.__setattr__(self, "M", arr)
        object.__setattr__(self, "claimed_memberships", claims)

    @classmethod
    def verified(cls, M: Any, tolerances: Tolerances = DEFAULT_TOLERANCES) -> "GroupElement":
        """Claim every membership that actually holds."""
        return cls(M, check_memberships(M, tolerances), tolerances)

    @property
    def n(self) -> int:
        return self.M.shape[0] // 2

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.M @ other.M, self.claimed_memberships & other.claimed_memberships)

    def inverse(self) -> "GroupElement":
        return GroupElement(np.linalg.inv(self.M), self.claimed_memberships)

    def to_dict(self) -> Dict[str, Any]:
        residuals = membership_residuals(self.M)
        return {
            "n": self.n,
            "memberships": sorted(self.claimed_memberships),
            "residuals": {name: residuals[name] for name in MEMBERSHIPS},
        }


def matrix_from_json(data: Any) -> np.ndarray:
    """Accept {"matrix": [[...]]} or a bare 2-D array."""
    if isinstance(data, dict):
        if "matrix" not in data:
            raise ValueError("Group input object must have a 'matrix' field")
        data = data["matrix"]
    return _square_even(data)
