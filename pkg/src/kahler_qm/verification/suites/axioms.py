"""Kähler axioms: compatibility of g, omega and J, symmetry and bilinearity."""

from typing import Dict

import numpy as np

from ...core.kahler import apply_J, metric_g, symplectic_omega
from ..base import BaseSuite, flag, relative
from ..registry import SuiteRegistry
from ..sampling import random_kahler_vector


@SuiteRegistry.register
class AxiomSuite(BaseSuite):
    """g(x,y) = omega(x,Jy), omega(x,y) = g(Jx,y), J-invariance of both forms, J^2 = -1."""

    suite_name = "axioms"
    default_dims = (1, 2, 4, 8, 16, 32, 64)
    default_trials = 1000
    default_tol = 1e-12

    def run_trial(self, rng: np.random.Generator, n: int) -> Dict[str, float]:
        x, y, z = (random_kahler_vector(rng, n) for _ in range(3))
        a, b = (float(v) for v in rng.standard_normal(2))
        jx, jy = apply_J(x), apply_J(y)

        g_xy = metric_g(x, y)
        w_xy = symplectic_omega(x, y)
        g_lin = metric_g(a * x + b * y, z)
        w_lin = symplectic_omega(a * x + b * y, z)
        linear_scale = abs(a) + abs(b)
        return {
            "g_equals_omega_xJy": relative(g_xy - symplectic_omega(x, jy), g_xy),
            "omega_equals_g_Jxy": relative(w_xy - metric_g(jx, y), w_xy),
            "omega_J_invariant": relative(symplectic_omega(jx, jy) - w_xy, w_xy),
            "g_J_invariant": relative(metric_g(jx, jy) - g_xy, g_xy),
            "g_symmetric": abs(g_xy - metric_g(y, x)),
            "omega_antisymmetric": abs(w_xy + symplectic_omega(y, x)),
            "omega_alternating": abs(symplectic_omega(x, x)),
            "g_positive": flag(metric_g(x, x) > 0.0),
            "g_bilinear": relative(g_lin - a * metric_g(x, z) - b * metric_g(y, z), linear_scale),
            "omega_bilinear": relative(
                w_lin - a * symplectic_omega(x, z) - b * symplectic_omega(y, z), linear_scale
            ),
            "J_squared": float(np.max(np.abs(apply_J(jx).stacked() + x.stacked()))),
        }
