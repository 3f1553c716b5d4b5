"""Born rule on the Kähler side against the complex oracle, plus Bell statistics."""

from typing import Dict

import numpy as np

from ...core.correspondence import gamma
from ...oracle import oracle_born
from ...quantum import BELL_LABELS, bell_state, born_probabilities, product_distance, register_distribution
from ..base import BaseSuite, flag
from ..registry import SuiteRegistry
from ..sampling import random_k_hermitian, random_kahler_vector

BELL_EXPECTED = {"00": 0.5, "01": 0.0, "10": 0.0, "11": 0.5}


@SuiteRegistry.register
class BornSuite(BaseSuite):
    """
    p_i = g(eta, E_i eta) matches |<v_i, psi>|^2 summed over each eigenspace.

    With born_rank_divisor the Kähler probabilities are divided by rank(E_i)
    and the oracle match is expected to fail; the suite then reports it.
    At n = 4 the Bell register distribution and its entanglement are checked.
    """

    suite_name = "born"
    default_dims = (1, 2, 4, 8, 16)
    default_trials = 200
    default_tol = 1e-10

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        eta = random_kahler_vector(rng, n)
        L = random_k_hermitian(rng, n)
        outcomes = born_probabilities(eta, L, self.born_rank_divisor, "structured", self.tolerances)
        expected = oracle_born(gamma(eta), L.complex_matrix(), self.tolerances)

        residuals = {"outcome_count": flag(len(outcomes) == len(expected))}
        if len(outcomes) == len(expected):
            residuals["probability_vs_oracle"] = max(
                abs(o.probability - p) for o, (_, p) in zip(outcomes, expected)
            )
            residuals["eigenvalue_vs_oracle"] = max(
                abs(o.eigenvalue - lam) for o, (lam, _) in zip(outcomes, expected)
            ) / max(1.0, L.frobenius_norm())
        residuals["probability_sum"] = abs(sum(o.probability for o in outcomes) - 1.0)

        if n == 4:
            joint = register_distribution(bell_state(), self.tolerances)
            residuals["bell_distribution"] = max(abs(joint[k] - BELL_EXPECTED[k]) for k in BELL_LABELS)
        return residuals

    def details(self) -> Dict[str, float]:
        if 4 not in self.dims:
            return {}
        return {"bell_product_distance": product_distance(bell_state())}
