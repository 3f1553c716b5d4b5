"""
The Kähler space K^{2n}.

Vectors are stored as two length-n real arrays (q, p). The canonical metric
g, symplectic form omega and complex structure J act on that pair directly;
the stacked 2n form [q; p] is only built at matrix boundaries.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from .errors import DimensionMismatchError, NormalizationError
from .config import DEFAULT_TOLERANCES, Tolerances


def _frozen(values: Any, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"'{name}' must be a 1-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"'{name}' contains non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False, init=False)
class KahlerVector:
    """
    An element (q, p) of K^{2n}.

    Attributes:
        q: Real amplitudes, length n
        p: Real amplitudes, length n

    Example:
        x = KahlerVector([1.0, 0.0], [0.0, 1.0])
        metric_g(x, x)  # 2.0
    """
    q: np.ndarray
    p: np.ndarray

    def __init__(self, q: Any, p: Any):
        q_arr = _frozen(q, "q")
        p_arr = _frozen(p, "p")
        if q_arr.shape != p_arr.shape:
            raise ValueError(
                f"q and p must have identical length, got {q_arr.size} and {p_arr.size}"
            )
        if q_arr.size < 1:
            raise ValueError("Kähler vectors need complex dimension n >= 1")
        object.__setattr__(self, "q", q_arr)
        object.__setattr__(self, "p", p_arr)

    @property
    def n(self) -> int:
        """Complex dimension."""
        return int(self.q.size)

    @classmethod
    def zeros(cls, n: int) -> "KahlerVector":
        return cls(np.zeros(n), np.zeros(n))

    @classmethod
    def basis(cls, n: int, index: int, imaginary: bool = False) -> "KahlerVector":
        """Unit vector e_index|+> (or e_index|-> when imaginary=True)."""
        unit = np.zeros(n)
        unit[index] = 1.0
        if imaginary:
            return cls(np.zeros(n), unit)
        return cls(unit, np.zeros(n))

    @classmethod
    def from_stacked(cls, stacked: Any) -> "KahlerVector":
        """Build from the stacked 2n array [q; p]."""
        arr = np.asarray(stacked, dtype=np.float64)
        if arr.ndim != 1 or arr.size % 2 != 0:
            raise ValueError(f"Stacked Kähler vector must have even length, got shape {arr.shape}")
        n = arr.size // 2
        return cls(arr[:n], arr[n:])

    def stacked(self) -> np.ndarray:
        """The 2n array [q; p]."""
        return np.concatenate([self.q, self.p])

    def norm_sq(self) -> float:
        return metric_g(self, self)

    def normalized(self) -> "KahlerVector":
        """Return eta / sqrt(g(eta, eta))."""
        norm = np.sqrt(self.norm_sq())
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero vector")
        return KahlerVector(self.q / norm, self.p / norm)

    def require_normalized(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> None:
        """Raise NormalizationError unless g(eta, eta) = 1 within tolerance."""
        norm_sq = self.norm_sq()
        if abs(norm_sq - 1.0) > tolerances.normalization:
            raise NormalizationError(norm_sq, tolerances.normalization)

    def __add__(self, other: "KahlerVector") -> "KahlerVector":
        _check_same_n(self, other)
        return KahlerVector(self.q + other.q, self.p + other.p)

    def __sub__(self, other: "KahlerVector") -> "KahlerVector":
        _check_same_n(self, other)
        return KahlerVector(self.q - other.q, self.p - other.p)

    def __mul__(self, scalar: float) -> "KahlerVector":
        return KahlerVector(self.q * float(scalar), self.p * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "KahlerVector":
        return KahlerVector(-self.q, -self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KahlerVector):
            return NotImplemented
        return bool(np.array_equal(self.q, other.q) and np.array_equal(self.p, other.p))

    def __hash__(self) -> int:
        return hash((self.q.tobytes(), self.p.tobytes()))

    def allclose(self, other: "KahlerVector", atol: float = 1e-12) -> bool:
        _check_same_n(self, other)
        return bool(np.allclose(self.q, other.q, atol=atol) and np.allclose(self.p, other.p, atol=atol))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KahlerVector":
        """
        Parse the JSON state format {"n": int, "q": [...], "p": [...]}.

        Raises:
            ValueError: If fields are missing or lengths disagree with n
        """
        if not isinstance(data, dict):
            raise ValueError(f"Kähler state must be a JSON object, got {type(data).__name__}")
        for key in ("n", "q", "p"):
            if key not in data:
                raise ValueError(f"Kähler state is missing '{key}' field")
        vec = cls(data["q"], data["p"])
        if vec.n != int(data["n"]):
            raise ValueError(f"Kähler state declares n={data['n']} but q/p have length {vec.n}")
        return vec

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "q": self.q.tolist(), "p": self.p.tolist()}


def _check_same_n(x: KahlerVector, y: KahlerVector) -> None:
    if x.n != y.n:
        raise DimensionMismatchError(x.n, y.n, "Kähler vectors")


# Array kernels. They broadcast over leading axes so suites can evaluate
# whole batches of (q, p) pairs at once.

def g_form(q1: np.ndarray, p1: np.ndarray, q2: np.ndarray, p2: np.ndarray) -> np.ndarray:
    return np.sum(q1 * q2 + p1 * p2, axis=-1)


def omega_form(q1: np.ndarray, p1: np.ndarray, q2: np.ndarray, p2: np.ndarray) -> np.ndarray:
    return np.sum(q1 * p2 - q2 * p1, axis=-1)


def metric_g(x: KahlerVector, y: KahlerVector) -> float:
    """
    Scalar product g(x, y) = sum_a (x.q_a y.q_a + x.p_a y.p_a).

    Raises:
        DimensionMismatchError: If x.n != y.n
    """
    _check_same_n(x, y)
    return float(g_form(x.q, x.p, y.q, y.p))


def symplectic_omega(x: KahlerVector, y: KahlerVector) -> float:
    """
    Symplectic form omega(x, y) = sum_a (x.q_a y.p_a - y.q_a x.p_a).

    Raises:
        DimensionMismatchError: If x.n != y.n
    """
    _check_same_n(x, y)
    return float(omega_form(x.q, x.p, y.q, y.p))


def apply_J(x: KahlerVector) -> KahlerVector:
    """Complex structure J(q, p) = (-p, q)."""
    return KahlerVector(-x.p, x.q)


def J_matrix(n: int) -> np.ndarray:
    """The 2n x 2n matrix [[0, -I], [I, 0]]."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])
