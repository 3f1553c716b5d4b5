"""
Measurement on the Kähler side: the Born rule through spectral projectors.

The probability of eigenvalue lambda_i in the normalized state eta is
g(eta, E_i eta). Since sum_i E_i = I these sum to g(eta, eta) = 1. The
literal reading that also divides by rank(E_i) is kept behind the
`rank_divisor` switch for comparison; it does not sum to 1.
"""

from dataclasses import asdict, dataclass
from functools import reduce
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.correspondence import lift_operator
from ..core.errors import DimensionMismatchError
from ..core.hilbert import ComplexOperator
from ..core.kahler import KahlerVector
from ..core.operators import KahlerOperator
from ..spectral import SpectralDecomposition, decompose


@dataclass(frozen=True)
class MeasurementOutcome:
    """
    One possible result of a measurement.

    Attributes:
        eigenvalue: The measured value lambda_i
        probability: Probability of obtaining it
        projector_rank: Real rank of E_i (even)
    """
    eigenvalue: float
    probability: float
    projector_rank: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def outcomes_from_decomposition(
    eta: KahlerVector, decomposition: SpectralDecomposition, rank_divisor: bool = False
) -> List[MeasurementOutcome]:
    """Born outcomes for an already decomposed operator (no normalization check)."""
    if eta.n != decomposition.n:
        raise DimensionMismatchError(decomposition.n, eta.n, "operator and state")
    x = eta.stacked()
    outcomes = []
    for lam, E, rank in zip(decomposition.eigenvalues, decomposition.projectors, decomposition.multiplicities):
        probability = min(max(float(x @ E @ x), 0.0), 1.0)
        if rank_divisor:
            probability /= rank
        outcomes.append(MeasurementOutcome(float(lam), probability, int(rank)))
    return outcomes


def born_probabilities(
    eta: KahlerVector,
    L: KahlerOperator,
    rank_divisor: bool = False,
    method: str = "structured",
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> List[MeasurementOutcome]:
    """
    Outcome distribution of measuring L in state eta.

    Args:
        eta: Normalized state
        L: K-Hermitian observable
        rank_divisor: Divide each probability by rank(E_i) (literal postulate reading)
        method: Spectral solver name
        tolerances: Numerical tolerances

    Returns:
        One MeasurementOutcome per distinct eigenvalue, ascending

    Raises:
        NormalizationError: If g(eta, eta) != 1
        StructureError: If L is not K-Hermitian
    """
    eta.require_normalized(tolerances)
    return outcomes_from_decomposition(eta, decompose(L, method, tolerances), rank_divisor)


def collapse(eta: KahlerVector, projector: np.ndarray) -> KahlerVector:
    """
    Post-measurement state E eta / sqrt(g(eta, E eta)).

    Raises:
        ValueError: If the outcome has zero probability
    """
    projected = projector @ eta.stacked()
    weight = float(np.linalg.norm(projected))
    if weight == 0.0:
        raise ValueError("Cannot condition on an outcome of probability zero")
    return KahlerVector.from_stacked(projected / weight)


def subsystem_operator(local: Any, index: int, dims: Sequence[int]) -> KahlerOperator:
    """
    Lift I (x) ... (x) local (x) ... (x) I acting on factor `index` of a register.

    Args:
        local: Complex matrix (or ComplexOperator) on factor `index`
        index: Which factor it acts on
        dims: Complex dimension of each factor; composite indices are row-major
    """
    entries = local.entries if isinstance(local, ComplexOperator) else np.asarray(local, dtype=np.complex128)
    if not 0 <= index < len(dims):
        raise ValueError(f"Subsystem index {index} out of range for {len(dims)} factors")
    if entries.shape != (dims[index], dims[index]):
        raise DimensionMismatchError(dims[index], entries.shape[0], "local operator and factor")
    factors = [entries if k == index else np.eye(d) for k, d in enumerate(dims)]
    return lift_operator(reduce(np.kron, factors))


def measure_subsystem(
    eta: KahlerVector,
    local: Any,
    index: int,
    dims: Sequence[int],
    rank_divisor: bool = False,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> List[MeasurementOutcome]:
    """Born outcomes for a local observable on one factor of a composite state."""
    return born_probabilities(
        eta, subsystem_operator(local, index, dims), rank_divisor, tolerances=tolerances
    )


def conditional_outcomes(
    eta: KahlerVector,
    first: KahlerOperator,
    second: KahlerOperator,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> List[Tuple[MeasurementOutcome, List[MeasurementOutcome]]]:
    """
    Measure `first`, collapse, then measure `second`.

    Returns:
        For each outcome of `first` with nonzero probability, that outcome
        and the conditional distribution of `second` in the collapsed state
    """
    eta.require_normalized(tolerances)
    first_dec = decompose(first, tolerances=tolerances)
    second_dec = decompose(second, tolerances=tolerances)
    result = []
    for outcome, E in zip(outcomes_from_decomposition(eta, first_dec), first_dec.projectors):
        if outcome.probability <= tolerances.abs_floor:
            continue
        collapsed = collapse(eta, E)
        result.append((outcome, outcomes_from_decomposition(collapsed, second_dec)))
    return result


def sample_outcomes(
    outcomes: Sequence[MeasurementOutcome], shots: int, rng: np.random.Generator
) -> np.ndarray:
    """
    Draw `shots` measurement results; returns counts per outcome.

    Probabilities are renormalized to absorb rounding before sampling.
    """
    if shots < 0:
        raise ValueError(f"shots must be >= 0, got {shots}")
    probabilities = np.array([o.probability for o in outcomes], dtype=np.float64)
    total = probabilities.sum()
    if total <= 0.0:
        raise ValueError("Outcome probabilities sum to zero")
    return rng.multinomial(shots, probabilities / total)
