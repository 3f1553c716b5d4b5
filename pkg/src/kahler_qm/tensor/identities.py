"""
Bilinear-form laws of the two tensor products.

For factors x, u in K^{2 n1} and y, v in K^{2 n2}:

    g_R(x(x)y, u(x)v)     = g(x,u) g(y,v)
    omega_R(x(x)y, u(x)v) = omega(x,u) g(y,v) + g(x,u) omega(y,v)
    g(x(x)_K y, u(x)_K v) = g(x,u) g(y,v) - omega(x,u) omega(y,v)
    omega(x(x)_K y, u(x)_K v) = g(x,u) omega(y,v) + omega(x,u) g(y,v)

The K laws are the real and imaginary parts of
<psi1 phi1, psi2 phi2> = <psi1, psi2><phi1, phi2>, which fixes the minus sign.
"""

from typing import Dict, Iterable, Tuple

from ..core.kahler import KahlerVector, metric_g, symplectic_omega
from .products import tensor_K, tensor_R, tensor_R_metric, tensor_R_omega

Quadruple = Tuple[KahlerVector, KahlerVector, KahlerVector, KahlerVector]

IDENTITY_NAMES = ("g_real", "omega_real", "g_kahler", "omega_kahler")


def bilinear_form_residuals(x: KahlerVector, y: KahlerVector, u: KahlerVector, v: KahlerVector) -> Dict[str, float]:
    """
    Residual of each law for one quadruple, scaled by 1 + |expected value|.
    """
    g1, w1 = metric_g(x, u), symplectic_omega(x, u)
    g2, w2 = metric_g(y, v), symplectic_omega(y, v)

    xy_r, uv_r = tensor_R(x, y), tensor_R(u, v)
    xy_k, uv_k = tensor_K(x, y), tensor_K(u, v)

    pairs = {
        "g_real": (tensor_R_metric(xy_r, uv_r), g1 * g2),
        "omega_real": (tensor_R_omega(xy_r, uv_r), w1 * g2 + g1 * w2),
        "g_kahler": (metric_g(xy_k, uv_k), g1 * g2 - w1 * w2),
        "omega_kahler": (symplectic_omega(xy_k, uv_k), g1 * w2 + w1 * g2),
    }
    return {name: abs(got - want) / (1.0 + abs(want)) for name, (got, want) in pairs.items()}


def tensor_bilinear_forms(quadruples: Iterable[Quadruple]) -> Dict[str, float]:
    """
    Check all four laws over a batch of quadruples.

    Args:
        quadruples: (x, y, u, v) with x, u of one dimension and y, v of another

    Returns:
        Maximum scaled residual per law, keyed by IDENTITY_NAMES
    """
    worst = {name: 0.0 for name in IDENTITY_NAMES}
    for x, y, u, v in quadruples:
        for name, residual in bilinear_form_residuals(x, y, u, v).items():
            worst[name] = max(worst[name], residual)
    return worst
