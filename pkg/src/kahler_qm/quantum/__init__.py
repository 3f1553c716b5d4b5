"""
Quantum postulates on the Kähler side.

States are normalized KahlerVectors, observables K-Hermitian operators,
outcomes come from spectral projectors, and composite systems use (x)_K.
"""

from .bloch import bloch_coordinates, bloch_grid, bloch_state
from .composite import (
    BELL_LABELS,
    BellSimulation,
    bell_state,
    compose_systems,
    product_distance,
    register_distribution,
    simulate_bell,
)
from .correlation import CorrelationQuery, CorrelationResult, correlation, kahler_correlation
from .measurement import (
    MeasurementOutcome,
    born_probabilities,
    collapse,
    conditional_outcomes,
    measure_subsystem,
    outcomes_from_decomposition,
    sample_outcomes,
    subsystem_operator,
)

__all__ = [
    "bloch_coordinates",
    "bloch_grid",
    "bloch_state",
    "BELL_LABELS",
    "BellSimulation",
    "bell_state",
    "compose_systems",
    "product_distance",
    "register_distribution",
    "simulate_bell",
    "CorrelationQuery",
    "CorrelationResult",
    "correlation",
    "kahler_correlation",
    "MeasurementOutcome",
    "born_probabilities",
    "collapse",
    "conditional_outcomes",
    "measure_subsystem",
    "outcomes_from_decomposition",
    "sample_outcomes",
    "subsystem_operator",
]
