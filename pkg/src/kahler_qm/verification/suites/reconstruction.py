"""Correlation chains computed as g + i omega against the complex oracle."""

from typing import Dict

import numpy as np

from ...core.hilbert import ComplexOperator, ComplexState
from ...quantum import CorrelationQuery, correlation
from ..base import BaseSuite
from ..registry import SuiteRegistry
from ..sampling import random_complex_vector, random_hermitian, random_projector, random_unitary

MAX_CHAIN = 5
OPERATOR_SAMPLERS = {
    "hermitian": random_hermitian,
    "unitary": random_unitary,
    "projector": random_projector,
}


@SuiteRegistry.register
class ReconstructionSuite(BaseSuite):
    """<L_1 ... L_k psi, phi> = g(L x, y) + i omega(L x, y) for k <= 5 mixed operators."""

    suite_name = "reconstruction"
    default_dims = (1, 2, 4, 8, 16)
    default_trials = 200
    default_tol = 1e-10

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        k = int(rng.integers(1, MAX_CHAIN + 1))
        kinds = list(OPERATOR_SAMPLERS)
        operators = []
        for _ in range(k):
            kind = kinds[int(rng.integers(len(kinds)))]
            operators.append(ComplexOperator(OPERATOR_SAMPLERS[kind](rng, n), kind, self.tolerances))
        query = CorrelationQuery(
            operators=operators,
            psi=ComplexState(random_complex_vector(rng, n)),
            phi=ComplexState(random_complex_vector(rng, n)),
        )
        result = correlation(query)
        return {"correlation": result.residual / (1.0 + abs(result.value))}
