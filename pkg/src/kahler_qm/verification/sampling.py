"""
Seeded random instances for the verification suites.

Every trial owns a PCG64 generator derived from (seed, suite, n, trial) via
numpy's SeedSequence spawn keys, so the instance drawn for a trial does not
depend on which other trials ran or in what order.
"""

import zlib
from typing import Optional

import numpy as np

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from ..core.kahler import KahlerVector
from ..core.operators import KahlerOperator
from ..spectral.closed_form import K4Parameters


def trial_rng(seed: int, suite: str, n: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial of one suite."""
    if seed < 0:
        raise ValueError(f"Seed must be an unsigned integer, got {seed}")
    sequence = np.random.SeedSequence(
        entropy=seed, spawn_key=(zlib.crc32(suite.encode("utf-8")), n, trial)
    )
    return np.random.Generator(np.random.PCG64(sequence))


def random_kahler_vector(rng: np.random.Generator, n: int, normalized: bool = True) -> KahlerVector:
    """Standard-normal (q, p), g-normalized unless asked otherwise."""
    x = KahlerVector(rng.standard_normal(n), rng.standard_normal(n))
    return x.normalized() if normalized else x


def random_complex_vector(rng: np.random.Generator, n: int, normalized: bool = True) -> np.ndarray:
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z) if normalized else z


def random_k_hermitian(rng: np.random.Generator, n: int) -> KahlerOperator:
    """Symmetrized and antisymmetrized standard-normal blocks."""
    G = rng.standard_normal((n, n))
    H = rng.standard_normal((n, n))
    return KahlerOperator((G + G.T) / 2.0, (H - H.T) / 2.0)


def random_complex_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    return random_k_hermitian(rng, n).complex_matrix()


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """QR of a complex Gaussian matrix with the phases of R divided out."""
    Q, R = np.linalg.qr(random_complex_matrix(rng, n))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_projector(rng: np.random.Generator, n: int, rank: Optional[int] = None) -> np.ndarray:
    """Orthogonal projector onto the span of `rank` random orthonormal columns."""
    r = int(rng.integers(1, n + 1)) if rank is None else rank
    if not 1 <= r <= n:
        raise ValueError(f"Projector rank must be in [1, {n}], got {r}")
    Q = random_unitary(rng, n)[:, :r]
    return Q @ Q.conj().T


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def orthogonal_counterexample(rng: np.random.Generator, n: int) -> np.ndarray:
    """
    block-diag(R1, R2) with R1 != R2 orthogonal: in O(2n) but neither
    symplectic nor J-commuting.
    """
    R1 = random_orthogonal(rng, n)
    R2 = random_orthogonal(rng, n)
    if np.linalg.norm(R1 - R2) < 0.5:
        R2 = -R2
    zero = np.zeros((n, n))
    return np.block([[R1, zero], [zero, R2]])


def random_k4_parameters(rng: np.random.Generator, min_abs_a: float = 0.1) -> K4Parameters:
    """Standard-normal (s11, s12, s22) and |a| >= min_abs_a."""
    s11, s12, s22 = rng.standard_normal(3)
    a = rng.standard_normal()
    magnitude = max(abs(a), min_abs_a)
    return K4Parameters(s11=float(s11), s12=float(s12), s22=float(s22), a=float(np.copysign(magnitude, a)))


def near_singular_k4_parameters(rng: np.random.Generator, scale: float = 1e-10) -> K4Parameters:
    """Parameters with |a| tiny, exercising the closed-form fallback."""
    s11, s12, s22 = rng.standard_normal(3)
    return K4Parameters(s11=float(s11), s12=float(s12), s22=float(s22), a=float(scale * rng.standard_normal()))


def small_coupling_k4_parameters(
    rng: np.random.Generator, tolerances: Tolerances = DEFAULT_TOLERANCES, upper: float = 1e-4
) -> K4Parameters:
    """
    Parameters with |a| log-uniform between the fallback threshold and `upper`.

    These stay on the closed-form path while s11 - s22 dominates kappa.
    """
    s11, s12, s22 = (float(v) for v in rng.standard_normal(3))
    threshold = tolerances.singular_a * (abs(s11) + abs(s22) + abs(s12) + 1.0)
    magnitude = 10.0 ** rng.uniform(np.log10(2.0 * threshold), np.log10(upper))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return K4Parameters(s11=s11, s12=s12, s22=s22, a=sign * float(magnitude))
