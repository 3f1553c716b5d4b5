"""Projector identity, Kronecker compatibility, lift intertwining and the four bilinear-form laws."""

from typing import Dict

import numpy as np

from ...core.correspondence import gamma, lift_operator
from ...core.kahler import KahlerVector
from ...oracle import oracle_kron
from ...tensor import bilinear_form_residuals, projector_P, projector_matrix, tensor_K, tensor_R
from ..base import BaseSuite, relative
from ..registry import SuiteRegistry
from ..sampling import random_complex_matrix, random_kahler_vector


@SuiteRegistry.register
class TensorSuite(BaseSuite):
    """
    P(x (x)_R y) = x (x)_K y, gamma(x (x)_K y) = gamma(x) (x) gamma(y), form laws.

    Lifted operators intertwine: lift(M1 (x) M2) (x (x)_K y) = (lift(M1) x) (x)_K (lift(M2) y).
    """

    suite_name = "tensor"
    default_dims = (1, 2, 4, 8)
    default_trials = 1000
    default_tol = 1e-11

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        # n is the first factor; the second factor is drawn up to the same size
        n2 = int(rng.integers(1, n + 1))
        x, u = random_kahler_vector(rng, n), random_kahler_vector(rng, n)
        y, v = random_kahler_vector(rng, n2), random_kahler_vector(rng, n2)

        real = tensor_R(x, y)
        kahler = tensor_K(x, y)
        folded = projector_P(real)
        by_matrix = projector_matrix(n, n2) @ real.flat()
        kron = oracle_kron(gamma(x), gamma(y))

        residuals = {
            "projector_identity": float(np.max(np.abs(folded.stacked() - kahler.stacked()))),
            "projector_matrix": float(np.max(np.abs(by_matrix - kahler.stacked()))),
            "kronecker_compatibility": float(np.max(np.abs(gamma(kahler).entries - kron.entries))),
            "kahler_norm_law": abs(kahler.norm_sq() - 1.0),
        }
        residuals.update(self._intertwining(rng, x, y, kron.entries))
        residuals.update(bilinear_form_residuals(x, y, u, v))
        return residuals

    def _intertwining(
        self, rng: np.random.Generator, x: KahlerVector, y: KahlerVector, kron_entries: np.ndarray
    ) -> Dict[str, float]:
        M1, M2 = random_complex_matrix(rng, x.n), random_complex_matrix(rng, y.n)
        joint = np.kron(M1, M2)
        scale = float(np.linalg.norm(M1) * np.linalg.norm(M2))
        lifted = lift_operator(joint).apply(tensor_K(x, y))
        factorwise = tensor_K(lift_operator(M1).apply(x), lift_operator(M2).apply(y))
        return {
            "lift_intertwining": relative(
                float(np.max(np.abs(lifted.stacked() - factorwise.stacked()))), scale
            ),
            "lift_intertwining_oracle": relative(
                float(np.max(np.abs(gamma(lifted).entries - joint @ kron_entries))), scale
            ),
        }
