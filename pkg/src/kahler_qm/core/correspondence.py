"""
The gamma correspondence between C^n and K^{2n}.

Vectors map as q + ip <-> (q, p); operators as S + iA <-> [[S, -A], [A, S]].
The complex inner product is conjugate-linear in its first argument, which
makes <psi1, psi2> = g(x1, x2) + i omega(x1, x2) for x_k = gamma_inv(psi_k).
"""

from typing import Any, Union

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatchError
from .hilbert import ComplexOperator, ComplexState, kind_residual
from .kahler import KahlerVector
from .operators import KahlerOperator


def gamma(x: KahlerVector) -> ComplexState:
    """Map (q, p) to psi = q + ip."""
    return ComplexState(x.q + 1j * x.p)


def gamma_inv(psi: ComplexState) -> KahlerVector:
    """Split psi into its real and imaginary parts. Exact inverse of gamma."""
    return KahlerVector(psi.entries.real, psi.entries.imag)


def complex_inner(psi1: ComplexState, psi2: ComplexState) -> complex:
    """
    Inner product <psi1, psi2> = sum conj(psi1_a) psi2_a.

    Raises:
        DimensionMismatchError: If the states have different dimension
    """
    if psi1.n != psi2.n:
        raise DimensionMismatchError(psi1.n, psi2.n, "complex states")
    return complex(np.vdot(psi1.entries, psi2.entries))


def lift_operator(L: Union[ComplexOperator, np.ndarray]) -> KahlerOperator:
    """
    Lift a complex n x n matrix to its J-commuting real image.

    Any complex matrix is accepted; the result is K-Hermitian exactly when L
    is Hermitian.

    Args:
        L: A ComplexOperator or a raw complex array

    Returns:
        KahlerOperator with S = Re L and A = Im L
    """
    entries = L.entries if isinstance(L, ComplexOperator) else np.asarray(L, dtype=np.complex128)
    return KahlerOperator(entries.real, entries.imag)


def lower_operator(
    Lk: Union[KahlerOperator, Any], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ComplexOperator:
    """
    Read S + iA back from a KahlerOperator or a 2n x 2n real matrix.

    The result is tagged "hermitian" when the operator is K-Hermitian,
    "unitary" when it is orthogonal, and "general" otherwise.

    Raises:
        StructureError: If a raw matrix does not commute with J
    """
    op = Lk if isinstance(Lk, KahlerOperator) else KahlerOperator.from_matrix(Lk, tolerances)
    entries = op.complex_matrix()
    scale = max(1.0, float(np.linalg.norm(entries)))
    for kind in ("hermitian", "unitary"):
        if kind_residual(entries, kind) <= tolerances.bound(scale):
            return ComplexOperator(entries, kind, tolerances)
    return ComplexOperator(entries, "general", tolerances)
