"""gamma correspondence: inner product identity, J as i, operator lift homomorphism."""

from typing import Dict

import numpy as np

from ...core.correspondence import complex_inner, gamma, gamma_inv, lift_operator, lower_operator
from ...core.hilbert import ComplexState
from ...core.kahler import apply_J, metric_g, symplectic_omega
from ...oracle import oracle_inner
from ..base import BaseSuite, flag, relative
from ..registry import SuiteRegistry
from ..sampling import random_complex_matrix, random_complex_vector, random_hermitian


@SuiteRegistry.register
class CorrespondenceSuite(BaseSuite):
    """<psi1, psi2> = g + i omega through gamma; lift(L1 L2) = lift(L1) lift(L2)."""

    suite_name = "correspondence"
    default_dims = (1, 2, 4, 8, 16, 32, 64)
    default_trials = 1000
    default_tol = 1e-12

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        psi1 = ComplexState(random_complex_vector(rng, n))
        psi2 = ComplexState(random_complex_vector(rng, n))
        x1, x2 = gamma_inv(psi1), gamma_inv(psi2)

        inner = complex_inner(psi1, psi2)
        kahler_side = complex(metric_g(x1, x2), symplectic_omega(x1, x2))
        expected = oracle_inner(psi1, psi2)

        L1 = random_complex_matrix(rng, n)
        L2 = random_complex_matrix(rng, n)
        product = lift_operator(L1 @ L2).matrix()
        composed = lift_operator(L1).matrix() @ lift_operator(L2).matrix()
        lift_scale = float(np.linalg.norm(L1) * np.linalg.norm(L2))

        H = random_hermitian(rng, n)
        lowered = lower_operator(lift_operator(H).matrix(), self.tolerances)

        return {
            "inner_product_identity": relative(abs(kahler_side - inner), abs(inner)),
            "inner_product_oracle": relative(abs(inner - expected), abs(expected)),
            "gamma_round_trip": flag(gamma(gamma_inv(psi1)) == psi1),
            "J_is_multiplication_by_i": float(
                np.max(np.abs(gamma(apply_J(x1)).entries - 1j * psi1.entries))
            ),
            "lift_homomorphism": relative(float(np.linalg.norm(product - composed)), lift_scale),
            "lift_lower_round_trip": float(np.max(np.abs(lowered.entries - H))),
            "lower_tags_hermitian": flag(lowered.kind == "hermitian"),
        }
