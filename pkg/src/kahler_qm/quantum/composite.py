"""
Composite systems, the Bell register and its sampled statistics.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.correspondence import gamma, gamma_inv
from ..core.hilbert import SIGMA_Z, ComplexState
from ..core.kahler import KahlerVector
from ..tensor import tensor_K
from .bloch import bloch_grid
from .measurement import MeasurementOutcome, conditional_outcomes, subsystem_operator

BELL_LABELS = ("00", "01", "10", "11")


def compose_systems(eta1: KahlerVector, eta2: KahlerVector) -> KahlerVector:
    """State of the joint system: eta1 (x)_K eta2. Normalized inputs give a normalized output."""
    return tensor_K(eta1, eta2)


def bell_state() -> KahlerVector:
    """gamma_inv((|00> + |11>) / sqrt(2)) in K^8."""
    amplitude = 1.0 / np.sqrt(2.0)
    return gamma_inv(ComplexState([amplitude, 0.0, 0.0, amplitude]))


def product_distance(eta: KahlerVector, points: int = 16) -> float:
    """
    Smallest distance from a two-qubit state to a product a (x)_K b on a Bloch grid.

    For normalized a, b the best global phase gives
    ||eta - e^{i alpha} a (x) b|| = sqrt(2 - 2 |<eta, a (x) b>|), so only the
    overlap magnitude is searched. The grid minimum bounds the true minimum
    from above; for the Bell state the true minimum is sqrt(2 - sqrt(2)).

    Args:
        eta: Normalized state with n = 4
        points: Grid points per Bloch angle for each factor
    """
    if eta.n != 4:
        raise ValueError(f"product_distance needs a two-qubit state (n=4), got n={eta.n}")
    target = gamma(eta).entries.reshape(2, 2)
    states = bloch_grid(points)
    overlaps = np.abs(states @ target.conj() @ states.T)
    return float(np.sqrt(max(0.0, 2.0 - 2.0 * float(overlaps.max()))))


@dataclass
class BellSimulation:
    """
    Sampled computational-basis statistics of a two-qubit register.

    Attributes:
        shots: Number of samples drawn
        seed: Seed used for sampling
        probabilities: Exact joint probability per label ("00", "01", "10", "11")
        counts: Sampled count per label
    """
    shots: int
    seed: int
    probabilities: Dict[str, float]
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def frequencies(self) -> Dict[str, float]:
        if self.shots == 0:
            return {label: 0.0 for label in self.counts}
        return {label: count / self.shots for label, count in self.counts.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shots": self.shots,
            "seed": self.seed,
            "probabilities": self.probabilities,
            "counts": self.counts,
            "frequencies": self.frequencies,
        }


def _bit(outcome: MeasurementOutcome) -> str:
    # sigma_z: +1 is |0>, -1 is |1>
    return "0" if outcome.eigenvalue > 0 else "1"


def register_distribution(
    eta: KahlerVector, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Dict[str, float]:
    """
    Joint sigma_z (x) sigma_z distribution of a two-qubit state.

    Measures the first qubit, collapses, then measures the second, so the
    joint probability is p(first) p(second | first).
    """
    first = subsystem_operator(SIGMA_Z, 0, (2, 2))
    second = subsystem_operator(SIGMA_Z, 1, (2, 2))
    joint = {label: 0.0 for label in BELL_LABELS}
    for outcome, conditional in conditional_outcomes(eta, first, second, tolerances):
        for inner in conditional:
            joint[_bit(outcome) + _bit(inner)] += outcome.probability * inner.probability
    return joint


def simulate_bell(
    shots: int,
    seed: int,
    eta: Optional[KahlerVector] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BellSimulation:
    """
    Sample computational-basis measurements of a two-qubit register.

    Args:
        shots: Number of samples
        seed: Unsigned seed for numpy's PCG64 generator
        eta: Register state (default: the Bell state)
        tolerances: Numerical tolerances
    """
    state = bell_state() if eta is None else eta
    probabilities = register_distribution(state, tolerances)
    if shots < 0:
        raise ValueError(f"shots must be >= 0, got {shots}")
    weights = np.array([probabilities[label] for label in BELL_LABELS])
    rng = np.random.Generator(np.random.PCG64(seed))
    counts = rng.multinomial(shots, weights / weights.sum())
    return BellSimulation(
        shots=shots,
        seed=seed,
        probabilities=probabilities,
        counts={label: int(c) for label, c in zip(BELL_LABELS, counts)},
    )
