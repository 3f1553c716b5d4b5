"""U(n) = Sp(2n, R) intersected with O(2n): lifted unitaries, counterexamples, generators."""

from functools import reduce
from typing import Any, Dict

import numpy as np
import scipy.linalg

from ...core.correspondence import lift_operator, lower_operator
from ...core.hilbert import ComplexState, kind_residual
from ...groups import (
    MEMBERSHIPS,
    PRINTED_GENERATORS,
    check_memberships,
    g2,
    generator_basis,
    generator_residuals,
    membership_residuals,
    phase_rotation_equivalence,
    symplectic_block_conditions,
)
from ..base import BaseSuite, flag
from ..registry import SuiteRegistry
from ..sampling import orthogonal_counterexample, random_complex_vector, random_unitary

PRODUCT_FACTORS = 10


@SuiteRegistry.register
class GroupSuite(BaseSuite):
    """
    Lifted unitaries lie in all four groups, block-diagonal rotations only in
    O(2n), products stay Kähler-unitary. At n = 2 the generator algebra, the
    exponential map and the phase rotation g2 are checked too.
    """

    suite_name = "groups"
    default_dims = (1, 2, 4, 8, 16)
    default_trials = 100
    default_tol = 1e-11

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        U = random_unitary(rng, n)
        M = lift_operator(U).matrix()
        residuals: Dict[str, float] = {
            "lifted_unitary_memberships": flag(check_memberships(M, self.tolerances) == set(MEMBERSHIPS)),
            "lifted_unitary_residual": max(membership_residuals(M).values()),
            "symplectic_block_conditions": max(symplectic_block_conditions(M).values()),
            "lower_is_unitary": kind_residual(lower_operator(M, self.tolerances).entries, "unitary"),
        }

        counterexample = orthogonal_counterexample(rng, n)
        residuals["counterexample_orthogonal_only"] = flag(
            check_memberships(counterexample, self.tolerances) == {"orthogonal"}
        )

        factors = [lift_operator(random_unitary(rng, n)).matrix() for _ in range(PRODUCT_FACTORS)]
        product = reduce(np.matmul, factors)
        residuals["product_closure"] = membership_residuals(product)["kahler_unitary"]
        residuals["inverse_closure"] = membership_residuals(np.linalg.inv(product))["kahler_unitary"]

        if n == 2:
            residuals.update(self._generator_checks(rng))
        return residuals

    def _generator_checks(self, rng: np.random.Generator) -> Dict[str, float]:
        basis = generator_basis()
        algebra = basis.residuals()
        theta = rng.standard_normal(4)
        theta *= rng.uniform(0.0, 10.0) / np.linalg.norm(theta)
        exponential = scipy.linalg.expm(basis.combination(theta))

        phi = float(rng.uniform(0.0, 2.0 * np.pi))
        rotation = scipy.linalg.expm(phi * basis.matrices[1])
        Z = ComplexState(random_complex_vector(rng, 2))
        return {
            "generators_skew_symmetric": max(r["skew_symmetric"] for r in algebra.values()),
            "generators_j_commuting": max(r["j_commuting"] for r in algebra.values()),
            "exp_generator_memberships": max(membership_residuals(exponential).values()),
            "exp_G2_equals_g2": float(np.max(np.abs(rotation - g2(phi)))),
            "phase_rotation_equivalence": phase_rotation_equivalence(phi, Z),
        }

    def details(self) -> Dict[str, Any]:
        failing = generator_residuals(PRINTED_GENERATORS)
        bound = self.tolerances.membership
        return {
            "printed_generators_failing_j_commutation": sorted(
                name for name, r in failing.items() if r["j_commuting"] > bound
            ),
            "printed_generators_failing_skew_symmetry": sorted(
                name for name, r in failing.items() if r["skew_symmetric"] > bound
            ),
        }
