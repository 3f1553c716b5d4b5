"""
Exception types raised by kahler_qm.

All of them subclass ValueError so callers that only care about bad input
can keep catching ValueError.
"""


class DimensionMismatchError(ValueError):
    """Operands do not share the same complex dimension."""

    def __init__(self, left: int, right: int, what: str = "operands"):
        super().__init__(f"Dimension mismatch between {what}: n={left} vs n={right}")
        self.left = left
        self.right = right


class StructureError(ValueError):
    """
    A structural invariant does not hold within tolerance.

    Raised for non-symmetric S, non-antisymmetric A, matrices that do not
    commute with J, odd eigenvalue multiplicities and similar violations.

    Attributes:
        residual: The measured violation (Frobenius norm or absolute gap)
        tolerance: The bound it was compared against
    """

    def __init__(self, message: str, residual: float = float("nan"), tolerance: float = float("nan")):
        if residual == residual:
            message = f"{message} (residual={residual:.3e}, tolerance={tolerance:.3e})"
        super().__init__(message)
        self.residual = residual
        self.tolerance = tolerance


class NormalizationError(ValueError):
    """A state is required to be normalized but g(eta, eta) != 1."""

    def __init__(self, norm_sq: float, tolerance: float):
        super().__init__(
            f"State is not normalized: g(eta, eta) = {norm_sq:.12g} "
            f"(tolerance {tolerance:.1e})"
        )
        self.norm_sq = norm_sq
        self.tolerance = tolerance
