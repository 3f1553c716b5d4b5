"""Core modules: the Kähler space, its operators, the gamma correspondence, and configuration."""

from .config import DEFAULT_TOLERANCES, ProfileConfig, SuiteConfig, Tolerances
from .correspondence import complex_inner, gamma, gamma_inv, lift_operator, lower_operator
from .errors import DimensionMismatchError, NormalizationError, StructureError
from .hilbert import ComplexOperator, ComplexState
from .kahler import J_matrix, KahlerVector, apply_J, metric_g, symplectic_omega
from .operators import KahlerOperator

__all__ = [
    "DEFAULT_TOLERANCES",
    "ProfileConfig",
    "SuiteConfig",
    "Tolerances",
    "complex_inner",
    "gamma",
    "gamma_inv",
    "lift_operator",
    "lower_operator",
    "DimensionMismatchError",
    "NormalizationError",
    "StructureError",
    "ComplexOperator",
    "ComplexState",
    "J_matrix",
    "KahlerVector",
    "apply_J",
    "metric_g",
    "symplectic_omega",
    "KahlerOperator",
]
