"""
Bloch-sphere chart for qubit states in K^4.

A normalized qubit is, up to a global phase, cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
The global phase is fixed so the |0> coefficient is real and nonnegative;
at the poles phi is set to 0.
"""

from typing import Tuple

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.correspondence import gamma, gamma_inv
from ..core.hilbert import ComplexState
from ..core.kahler import KahlerVector


def bloch_coordinates(
    eta: KahlerVector, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[float, float]:
    """
    (theta, phi) with theta in [0, pi] and phi in [0, 2 pi).

    Raises:
        ValueError: If eta is not a qubit (n != 2) or is the zero vector
        NormalizationError: If g(eta, eta) != 1
    """
    if eta.n != 2:
        raise ValueError(f"Bloch coordinates need a qubit (n=2), got n={eta.n}")
    if eta.norm_sq() == 0.0:
        raise ValueError("The zero vector has no Bloch coordinates")
    eta.require_normalized(tolerances)

    psi0, psi1 = gamma(eta).entries
    r0, r1 = abs(psi0), abs(psi1)
    theta = 2.0 * float(np.arctan2(r1, r0))
    if r0 <= tolerances.rel or r1 <= tolerances.rel:
        return theta, 0.0
    phi = float(np.mod(np.angle(psi1) - np.angle(psi0), 2.0 * np.pi))
    # mod can round up to exactly 2 pi
    return theta, (0.0 if phi >= 2.0 * np.pi else phi)


def bloch_state(theta: float, phi: float) -> KahlerVector:
    """gamma_inv of cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    return gamma_inv(ComplexState([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)]))


def bloch_grid(points: int) -> np.ndarray:
    """
    Complex qubit states on a points x points (theta, phi) grid.

    Returns:
        Array of shape (points * points, 2)
    """
    if points < 1:
        raise ValueError(f"Grid needs at least one point per axis, got {points}")
    theta, phi = np.meshgrid(
        np.linspace(0.0, np.pi, points),
        np.linspace(0.0, 2.0 * np.pi, points, endpoint=False),
        indexing="ij",
    )
    return np.stack(
        [np.cos(theta / 2.0).ravel(), (np.exp(1j * phi) * np.sin(theta / 2.0)).ravel()], axis=1
    )
