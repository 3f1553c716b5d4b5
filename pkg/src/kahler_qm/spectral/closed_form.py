"""
Closed-form spectra for K^2 and K^4.

For n = 2 write S = [[s11, s12], [s12, s22]] and A = [[0, a], [-a, 0]]. Then

    kappa = sqrt(4a^2 + (s11 - s22)^2 + 4 s12^2)
    lambda_{1,2} = (-/+ kappa + s11 + s22) / 2

and with w_pm = (+/-kappa + s11 - s22) / (2a), w0 = s12 / a the complex
eigenvectors are n_pm (w_pm (w0 + i) / (1 + w0^2), 1). Every formula
divides by a, so near-zero a falls back to the structured solver.

The two roots satisfy w_plus * w_minus = -(1 + w0^2). Only the root whose
numerator adds same-signed terms is evaluated directly; the other comes
from that product, since kappa ~ |s11 - s22| when a is small.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.correspondence import gamma_inv
from ..core.hilbert import ComplexState
from ..core.kahler import KahlerVector, apply_J
from ..core.operators import KahlerOperator
from .base import BaseSolver
from .decomposition import SpectralDecomposition
from .pairing import canonical_phase, projectors_from_pairs
from .registry import SolverRegistry
from .structured import StructuredSolver


@dataclass(frozen=True)
class K4Parameters:
    """The four real numbers fixing a K-Hermitian operator on K^4."""

    s11: float
    s12: float
    s22: float
    a: float

    @classmethod
    def from_operator(cls, L: KahlerOperator) -> "K4Parameters":
        if L.n != 2:
            raise ValueError(f"K^4 parameters need n=2, got n={L.n}")
        return cls(
            s11=float(L.S[0, 0]), s12=float(L.S[0, 1]), s22=float(L.S[1, 1]), a=float(L.A[0, 1])
        )

    def operator(self) -> KahlerOperator:
        return KahlerOperator(
            [[self.s11, self.s12], [self.s12, self.s22]], [[0.0, self.a], [-self.a, 0.0]]
        )

    @property
    def kappa(self) -> float:
        return float(np.sqrt(
            4 * self.a ** 2 + (self.s11 - self.s22) ** 2 + 4 * self.s12 ** 2
        ))

    def eigenvalues(self) -> Tuple[float, float]:
        """(lambda_1, lambda_2) with lambda_1 <= lambda_2."""
        k = self.kappa
        return (-k + self.s11 + self.s22) / 2, (k + self.s11 + self.s22) / 2

    def is_singular(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
        """True when |a| is too small for the w-parametrization."""
        scale = abs(self.s11) + abs(self.s22) + abs(self.s12) + 1.0
        return abs(self.a) <= tolerances.singular_a * scale

    def w_values(self) -> Tuple[float, float, float]:
        """(w_minus, w_plus, w0), each without cancellation."""
        k = self.kappa
        d = self.s11 - self.s22
        w0 = self.s12 / self.a
        if d >= 0.0:
            w_plus = (k + d) / (2 * self.a)
            w_minus = -(1 + w0 ** 2) / w_plus
        else:
            w_minus = (d - k) / (2 * self.a)
            w_plus = -(1 + w0 ** 2) / w_minus
        return w_minus, w_plus, w0


def _eigenvector(w: float, w0: float, tolerances: Tolerances) -> KahlerVector:
    # gamma_inv of n (w (w0 + i) / (1 + w0^2), 1), phase-fixed like the structured solver
    norm = np.sqrt(1 + w0 ** 2) / np.sqrt(1 + w ** 2 + w0 ** 2)
    rho = w / (1 + w0 ** 2)
    entries = norm * np.array([rho * (w0 + 1j), 1.0 + 0j])
    return gamma_inv(ComplexState(canonical_phase(entries, tolerances)))


def closed_form_eigenvectors_n2(
    params: K4Parameters, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[KahlerVector, KahlerVector]:
    """
    Normalized representatives V1 (for lambda_1) and V2 (for lambda_2).

    Each representative's first significant complex coordinate is real and
    positive, the convention the structured solver uses.

    Raises:
        ZeroDivisionError: If a == 0
    """
    if params.a == 0.0:
        raise ZeroDivisionError("Closed-form eigenvectors are undefined at a = 0")
    w_minus, w_plus, w0 = params.w_values()
    return _eigenvector(w_minus, w0, tolerances), _eigenvector(w_plus, w0, tolerances)


def unpaired_basis_n2(params: K4Parameters) -> List[KahlerVector]:
    """
    The four non-orthogonal eigenvectors U1..U4 of the symbolic solution.

    U1, U2 belong to lambda_1 and U3, U4 to lambda_2. Within each eigenvalue
    the two vectors are independent but neither orthogonal nor J-related.
    """
    w_minus, w_plus, w0 = params.w_values()
    return [
        KahlerVector([-w_minus, -w0], [0.0, 1.0]),
        KahlerVector([w0, -w_plus], [1.0, 0.0]),
        KahlerVector([-w_plus, -w0], [0.0, 1.0]),
        KahlerVector([w0, -w_minus], [1.0, 0.0]),
    ]


def repaired_basis_n2(params: K4Parameters) -> List[KahlerVector]:
    """U1, JU1, U3, JU3: a basis whose second member of each pair is J of the first."""
    u1, _, u3, _ = unpaired_basis_n2(params)
    return [u1, apply_J(u1), u3, apply_J(u3)]


def eigen_closed_form_n1(L: KahlerOperator) -> SpectralDecomposition:
    """
    The trivial K^2 case: L = s I_2 with one eigenvalue of multiplicity 2.

    In the frame split the projector becomes diag(1, 0) + diag(0, 1).
    """
    if L.n != 1:
        raise ValueError(f"eigen_closed_form_n1 needs n=1, got n={L.n}")
    v = KahlerVector([1.0], [0.0])
    return SpectralDecomposition(
        n=1,
        eigenvalues=np.array([float(L.S[0, 0])]),
        multiplicities=[2],
        projectors=[np.eye(2)],
        pairs=[[(v, apply_J(v))]],
        method=ClosedFormSolver.solver_type,
    )


def eigen_closed_form_n2(
    L: KahlerOperator, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SpectralDecomposition:
    """
    Spectral decomposition of a K^4 operator from the explicit formulas.

    Near a = 0 the w-parametrization breaks down and the structured solver
    is used instead; the result's method then reads "closed-form/fallback".
    """
    params = K4Parameters.from_operator(L)
    if params.is_singular(tolerances):
        result = StructuredSolver(tolerances).solve(L)
        result.method = f"{ClosedFormSolver.solver_type}/fallback"
        return result

    lam1, lam2 = params.eigenvalues()
    v1, v2 = closed_form_eigenvectors_n2(params, tolerances)
    grouped = [[(v1, apply_J(v1))], [(v2, apply_J(v2))]]
    projectors = projectors_from_pairs(grouped)
    return SpectralDecomposition(
        n=2,
        eigenvalues=np.array([lam1, lam2]),
        multiplicities=[2, 2],
        projectors=projectors,
        pairs=grouped,
        method=ClosedFormSolver.solver_type,
    )


@SolverRegistry.register
class ClosedFormSolver(BaseSolver):
    """Explicit formulas for n = 1 and n = 2."""

    solver_type = "closed-form"

    def solve(self, L: KahlerOperator) -> SpectralDecomposition:
        if L.n == 1:
            return eigen_closed_form_n1(L)
        if L.n == 2:
            return eigen_closed_form_n2(L, self.tolerances)
        raise ValueError(f"The closed-form solver handles n=1 and n=2 only, got n={L.n}")
