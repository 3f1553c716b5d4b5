"""
Correlation functions <L_1 ... L_k psi, phi> computed on the Kähler side.

With x = gamma_inv(psi), y = gamma_inv(phi) and lifted operators,
<L_1 ... L_k psi, phi> = g(L_1 ... L_k x, y) + i omega(L_1 ... L_k x, y).
Every correlation is therefore recoverable from real geometry alone; the
complex chain is evaluated alongside as a cross-check.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from ..core.correspondence import gamma, gamma_inv, lift_operator
from ..core.errors import DimensionMismatchError
from ..core.hilbert import ComplexOperator, ComplexState
from ..core.kahler import KahlerVector, metric_g, symplectic_omega
from ..core.operators import KahlerOperator
from ..oracle import oracle_correlation

OperatorLike = Union[ComplexOperator, KahlerOperator]
StateLike = Union[ComplexState, KahlerVector]


def _as_kahler_state(state: StateLike) -> KahlerVector:
    return gamma_inv(state) if isinstance(state, ComplexState) else state


def _as_kahler_operator(op: OperatorLike) -> KahlerOperator:
    return lift_operator(op) if isinstance(op, ComplexOperator) else op


def _operator_from_dict(data: Dict[str, Any]) -> OperatorLike:
    if not isinstance(data, dict):
        raise ValueError(f"Operator must be a JSON object, got {type(data).__name__}")
    if "S" in data:
        return KahlerOperator.from_dict(data)
    return ComplexOperator.from_dict(data)


def _state_from_dict(data: Dict[str, Any]) -> StateLike:
    if not isinstance(data, dict):
        raise ValueError(f"State must be a JSON object, got {type(data).__name__}")
    if "q" in data:
        return KahlerVector.from_dict(data)
    return ComplexState.from_dict(data)


@dataclass
class CorrelationQuery:
    """
    An ordered operator chain and two states, in either representation.

    Attributes:
        operators: L_1 ... L_k, ComplexOperator and KahlerOperator may be mixed
        psi: State the chain acts on
        phi: State in the second slot of the inner product
    """
    operators: List[OperatorLike]
    psi: StateLike
    phi: StateLike

    def __post_init__(self) -> None:
        if not self.operators:
            raise ValueError("Correlation needs at least one operator (k >= 1)")
        n = self.psi.n
        if self.phi.n != n:
            raise DimensionMismatchError(n, self.phi.n, "psi and phi")
        for op in self.operators:
            if op.n != n:
                raise DimensionMismatchError(n, op.n, "operator and states")

    @property
    def n(self) -> int:
        return self.psi.n

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CorrelationQuery":
        """
        Parse {"operators": [...], "psi": {...}, "phi": {...}}.

        Operators with an "S" field are Kähler operators, otherwise complex
        ({"re", "im", "kind"}); states with a "q" field are Kähler vectors,
        otherwise complex ({"re", "im"}).
        """
        if not isinstance(data, dict):
            raise ValueError(f"Correlation query must be a JSON object, got {type(data).__name__}")
        for key in ("operators", "psi", "phi"):
            if key not in data:
                raise ValueError(f"Correlation query is missing '{key}' field")
        return cls(
            operators=[_operator_from_dict(op) for op in data["operators"]],
            psi=_state_from_dict(data["psi"]),
            phi=_state_from_dict(data["phi"]),
        )


@dataclass(frozen=True)
class CorrelationResult:
    """
    Attributes:
        value: g + i omega evaluated on the Kähler side
        complex_value: The same correlation by direct complex arithmetic
        residual: |value - complex_value|
    """
    value: complex
    complex_value: complex
    residual: float

    def within(self, rel_tol: float = 1e-10) -> bool:
        """True when residual < rel_tol * (1 + |value|)."""
        return self.residual < rel_tol * (1.0 + abs(self.value))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "complex_value": {"re": self.complex_value.real, "im": self.complex_value.imag},
            "residual": self.residual,
        }


def kahler_correlation(operators: Sequence[KahlerOperator], x: KahlerVector, y: KahlerVector) -> complex:
    """g(L_1 ... L_k x, y) + i omega(L_1 ... L_k x, y), applying L_k first."""
    for op in reversed(list(operators)):
        x = op.apply(x)
    return complex(metric_g(x, y), symplectic_omega(x, y))


def correlation(query: CorrelationQuery) -> CorrelationResult:
    """
    Evaluate a correlation query on both sides.

    Returns:
        CorrelationResult with the Kähler-side value and its residual
        against the complex chain
    """
    value = kahler_correlation(
        [_as_kahler_operator(op) for op in query.operators],
        _as_kahler_state(query.psi),
        _as_kahler_state(query.phi),
    )
    complex_ops = [
        op.complex_matrix() if isinstance(op, KahlerOperator) else op.entries
        for op in query.operators
    ]
    psi = query.psi if isinstance(query.psi, ComplexState) else gamma(query.psi)
    phi = query.phi if isinstance(query.phi, ComplexState) else gamma(query.phi)
    expected = oracle_correlation(complex_ops, psi, phi)
    return CorrelationResult(value=value, complex_value=expected, residual=float(np.abs(value - expected)))
