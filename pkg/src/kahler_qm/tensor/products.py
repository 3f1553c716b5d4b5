"""
The two tensor products of Kähler spaces and the projector between them.

x (x)_R y keeps all four sign sectors (++, +-, -+, --) of the factors and lives
in a 4 n1 n2 dimensional real space. x (x)_K y folds them the way complex
multiplication does and lives in K^{2 n1 n2}; composite indices (a, b)
flatten row-major as a * n2 + b, the same order as numpy.kron.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.sparse

from ..core.kahler import KahlerVector

PLUS, MINUS = 0, 1


@dataclass(frozen=True, eq=False, init=False)
class RealTensorVector:
    """
    An element of the real tensor product K^{2 n1} (x)_R K^{2 n2}.

    Attributes:
        coefficients: Array of shape (2, 2, n1, n2) indexed by
            (sign1, sign2, a, b) with sign 0 = '+' (q part), 1 = '-' (p part)
    """
    coefficients: np.ndarray

    def __init__(self, coefficients: Any):
        arr = np.array(coefficients, dtype=np.float64)
        if arr.ndim != 4 or arr.shape[:2] != (2, 2) or min(arr.shape[2:]) < 1:
            raise ValueError(f"Real tensor coefficients must have shape (2, 2, n1, n2), got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def n1(self) -> int:
        return int(self.coefficients.shape[2])

    @property
    def n2(self) -> int:
        return int(self.coefficients.shape[3])

    @property
    def dimension(self) -> int:
        return 4 * self.n1 * self.n2

    def sector(self, sign1: str, sign2: str) -> np.ndarray:
        """The n1 x n2 block for signs like ('+', '-')."""
        index = {"+": PLUS, "-": MINUS}
        return self.coefficients[index[sign1], index[sign2]]

    def as_matrix(self) -> np.ndarray:
        """
        The (2 n1) x (2 n2) matrix T with T[s1 n1 + a, s2 n2 + b] = c[s1, s2, a, b].

        For a product state this is the outer product of the stacked factors.
        """
        c = self.coefficients
        return np.block([[c[PLUS, PLUS], c[PLUS, MINUS]], [c[MINUS, PLUS], c[MINUS, MINUS]]])

    def flat(self) -> np.ndarray:
        """Coefficients as a 4 n1 n2 vector in (sign1, sign2, a, b) C order."""
        return self.coefficients.reshape(-1)

    def __add__(self, other: "RealTensorVector") -> "RealTensorVector":
        if self.coefficients.shape != other.coefficients.shape:
            raise ValueError("Real tensor vectors have different shapes")
        return RealTensorVector(self.coefficients + other.coefficients)

    def __mul__(self, scalar: float) -> "RealTensorVector":
        return RealTensorVector(self.coefficients * float(scalar))

    __rmul__ = __mul__


def tensor_R(x: KahlerVector, y: KahlerVector) -> RealTensorVector:
    """
    Real tensor product: (++)=q1 q2, (-+)=p1 q2, (+-)=q1 p2, (--)=p1 p2.
    """
    sectors1 = np.stack([x.q, x.p])
    sectors2 = np.stack([y.q, y.p])
    return RealTensorVector(np.einsum("sa,tb->stab", sectors1, sectors2))


def tensor_K(x: KahlerVector, y: KahlerVector) -> KahlerVector:
    """
    Kähler tensor product with q(a,b) = q1a q2b - p1a p2b, p(a,b) = q1a p2b + p1a q2b.

    gamma(x (x)_K y) equals the complex Kronecker product of gamma(x) and gamma(y).
    """
    q = np.outer(x.q, y.q) - np.outer(x.p, y.p)
    p = np.outer(x.q, y.p) + np.outer(x.p, y.q)
    return KahlerVector(q.reshape(-1), p.reshape(-1))


def projector_P(t: RealTensorVector) -> KahlerVector:
    """
    Fold a real tensor into K^{2 n1 n2}: q = (++) - (--), p = (+-) + (-+).

    The map is linear, so it is applied to arbitrary real tensors, not only
    to products; on products projector_P(tensor_R(x, y)) == tensor_K(x, y).
    """
    c = t.coefficients
    q = c[PLUS, PLUS] - c[MINUS, MINUS]
    p = c[PLUS, MINUS] + c[MINUS, PLUS]
    return KahlerVector(q.reshape(-1), p.reshape(-1))


def projector_matrix(n1: int, n2: int) -> scipy.sparse.csr_matrix:
    """
    projector_P as an explicit sparse (2 n1 n2) x (4 n1 n2) matrix.

    Columns follow RealTensorVector.flat(); rows follow KahlerVector.stacked().
    """
    if n1 < 1 or n2 < 1:
        raise ValueError(f"Factor dimensions must be >= 1, got n1={n1}, n2={n2}")
    block = n1 * n2
    k = np.arange(block)
    # flat index of (s1, s2, k) is (2 s1 + s2) * block + k
    rows = np.concatenate([k, k, block + k, block + k])
    cols = np.concatenate([
        (2 * PLUS + PLUS) * block + k,
        (2 * MINUS + MINUS) * block + k,
        (2 * PLUS + MINUS) * block + k,
        (2 * MINUS + PLUS) * block + k,
    ])
    data = np.concatenate([np.ones(block), -np.ones(block), np.ones(block), np.ones(block)])
    return scipy.sparse.csr_matrix((data, (rows, cols)), shape=(2 * block, 4 * block))


def tensor_R_metric(t: RealTensorVector, u: RealTensorVector) -> float:
    """Euclidean scalar product on the 4 n1 n2 coefficients."""
    _check_same_shape(t, u)
    return float(np.sum(t.coefficients * u.coefficients))


def tensor_R_omega(t: RealTensorVector, u: RealTensorVector) -> float:
    """
    Symplectic form induced by J1 (x) I + I (x) J2 on the real tensor space.

    In matrix form omega_R(T, U) = <(J1 T + T J2^T), U>. It is a closed
    antisymmetric form but degenerate: J1 (x) I + I (x) J2 squares to
    -2 + 2 J1 (x) J2, not -1, so it is not a Kähler structure on (x)_R. On
    products it satisfies omega_R(x (x) y, u (x) v) = omega g + g omega.
    """
    _check_same_shape(t, u)
    T = t.as_matrix()
    U = u.as_matrix()
    j1 = _j(t.n1)
    j2 = _j(t.n2)
    return float(np.sum((j1 @ T) * U) + np.sum((T @ j2.T) * U))


def _j(n: int) -> np.ndarray:
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])


def _check_same_shape(t: RealTensorVector, u: RealTensorVector) -> None:
    if t.coefficients.shape != u.coefficients.shape:
        raise ValueError(
            f"Real tensor vectors have different factor dimensions: "
            f"({t.n1}, {t.n2}) vs ({u.n1}, {u.n2})"
        )
