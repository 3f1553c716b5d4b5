"""
Kähler QM - quantum mechanics on real Kähler spaces K^{2n}.

States are pairs (q, p) of real vectors with the metric g, the symplectic
form omega and the complex structure J. Observables are K-Hermitian
operators [[S, -A], [A, S]]. Everything the complex formalism computes is
recovered as g + i omega and checked against a complex-Hilbert-space oracle.

Main features:
- Structured, dense and closed-form spectral solvers behind a plug-in registry
- Real and Kähler tensor products and the projector between them
- Born rule, sequential register measurement, Bell simulation
- Kähler unitary group membership, generators and exponential map
- Seeded verification suites with byte-reproducible JSON reports

Example:
    from kahler_qm import KahlerOperator, KahlerVector, born_probabilities

    L = KahlerOperator.hermitian([[1, 0], [0, -1]], [[0, 0], [0, 0]])
    eta = KahlerVector([1, 1], [0, 0]).normalized()
    for outcome in born_probabilities(eta, L):
        print(outcome.eigenvalue, outcome.probability)
"""

__version__ = "0.1.0"
__license__ = "MIT"

# Core
from .core import (
    DEFAULT_TOLERANCES,
    ComplexOperator,
    ComplexState,
    DimensionMismatchError,
    KahlerOperator,
    KahlerVector,
    NormalizationError,
    ProfileConfig,
    StructureError,
    SuiteConfig,
    Tolerances,
    apply_J,
    complex_inner,
    gamma,
    gamma_inv,
    lift_operator,
    lower_operator,
    metric_g,
    symplectic_omega,
)

# Spectral theory
from .spectral import SolverRegistry, SpectralDecomposition, decompose, eigen_structured

# Tensor products
from .tensor import projector_P, tensor_K, tensor_R

# Quantum postulates
from .quantum import (
    bell_state,
    born_probabilities,
    compose_systems,
    correlation,
    simulate_bell,
)

# Groups
from .groups import GroupElement, check_memberships, exp_generator

# Verification
from .verification import SuiteRegistry, VerificationReport, run_suite
from .profiles import ProfileLoader

__all__ = [
    # Version info
    "__version__",
    "__license__",
    # Core
    "DEFAULT_TOLERANCES",
    "ComplexOperator",
    "ComplexState",
    "DimensionMismatchError",
    "KahlerOperator",
    "KahlerVector",
    "NormalizationError",
    "ProfileConfig",
    "StructureError",
    "SuiteConfig",
    "Tolerances",
    "apply_J",
    "complex_inner",
    "gamma",
    "gamma_inv",
    "lift_operator",
    "lower_operator",
    "metric_g",
    "symplectic_omega",
    # Spectral
    "SolverRegistry",
    "SpectralDecomposition",
    "decompose",
    "eigen_structured",
    # Tensor
    "projector_P",
    "tensor_K",
    "tensor_R",
    # Quantum
    "bell_state",
    "born_probabilities",
    "compose_systems",
    "correlation",
    "simulate_bell",
    # Groups
    "GroupElement",
    "check_memberships",
    "exp_generator",
    # Verification
    "SuiteRegistry",
    "VerificationReport",
    "run_suite",
    "ProfileLoader",
]
