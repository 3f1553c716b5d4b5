"""
Generators of the Kähler unitary group on K^4 and the exponential map.

The Lie algebra is spanned by the lifts of i sigma_y, i I, i sigma_x and
i sigma_z. For H = S + iA the lift of iH is [[-A, -S], [S, -A]], which is
skew-symmetric and commutes with J whenever H is Hermitian.

The typeset basis that circulates with this construction gets G3 and G4
wrong: both fail J-commutation and the printed G4 is not even
skew-symmetric. PRINTED_GENERATORS keeps that table for comparison;
generator_basis() returns the repaired one.
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.correspondence import gamma_inv, lift_operator
from ..core.hilbert import IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z, ComplexState
from ..core.kahler import J_matrix
from .membership import MEMBERSHIPS, GroupElement

PRINTED_GENERATORS: Dict[str, np.ndarray] = {
    "G1": np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=np.float64),
    "G2": np.array([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=np.float64),
    "G3": np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]], dtype=np.float64),
    "G4": np.array([[0, -1, 0, 0], [1, 0, 0, 1], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=np.float64),
}
for _matrix in PRINTED_GENERATORS.values():
    _matrix.setflags(write=False)


def lift_i_times(H: np.ndarray) -> np.ndarray:
    """Real 2n x 2n matrix of the complex matrix iH."""
    return lift_operator(1j * np.asarray(H, dtype=np.complex128)).matrix()


@dataclass(frozen=True)
class GeneratorBasis:
    """
    The four 4 x 4 generators G1..G4.

    Attributes:
        matrices: (G1, G2, G3, G4)
    """
    matrices: Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    def combination(self, coeffs: Sequence[float]) -> np.ndarray:
        """sum_i theta_i G_i."""
        theta = np.asarray(coeffs, dtype=np.float64)
        if theta.shape != (4,):
            raise ValueError(f"Expected 4 generator coefficients, got shape {theta.shape}")
        return sum(t * G for t, G in zip(theta, self.matrices))

    def residuals(self) -> Dict[str, Dict[str, float]]:
        """Per generator: ||G^T + G|| and ||G J - J G||."""
        return generator_residuals(dict(zip(("G1", "G2", "G3", "G4"), self.matrices)))


def generator_residuals(generators: Dict[str, np.ndarray]) -> Dict[str, Dict[str, float]]:
    J = J_matrix(2)
    return {
        name: {
            "skew_symmetric": float(np.linalg.norm(G.T + G)),
            "j_commuting": float(np.linalg.norm(G @ J - J @ G)),
        }
        for name, G in generators.items()
    }


def generator_basis() -> GeneratorBasis:
    """The repaired basis: lifts of i sigma_y, i I, i sigma_x, i sigma_z."""
    return GeneratorBasis(
        matrices=(
            lift_i_times(SIGMA_Y),
            lift_i_times(IDENTITY_2),
            lift_i_times(SIGMA_X),
            lift_i_times(SIGMA_Z),
        )
    )


def exp_generator(
    coeffs: Sequence[float], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> GroupElement:
    """
    exp(sum_i theta_i G_i) by scaling and squaring (scipy.linalg.expm).

    The result is verified to lie in all four groups.
    """
    M = scipy.linalg.expm(generator_basis().combination(coeffs))
    return GroupElement(M, MEMBERSHIPS, tolerances)


def g2(phi: float) -> np.ndarray:
    """
    The explicit phase rotation

        [[c, 0, -s, 0], [0, c, 0, -s], [s, 0, c, 0], [0, s, 0, c]]

    with c = cos(phi), s = sin(phi).
    """
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, 0, -s, 0], [0, c, 0, -s], [s, 0, c, 0], [0, s, 0, c]])


def phase_rotation_equivalence(phi: float, Z: ComplexState) -> float:
    """
    max |gamma_inv(e^{i phi} Z) - g2(phi) gamma_inv(Z)| for a qubit state Z.
    """
    if Z.n != 2:
        raise ValueError(f"Phase rotation acts on K^4 (n=2), got n={Z.n}")
    rotated = gamma_inv(ComplexState(np.exp(1j * phi) * Z.entries)).stacked()
    acted = g2(phi) @ gamma_inv(Z).stacked()
    return float(np.max(np.abs(rotated - acted)))
