"""Complex-Hilbert-space reference backend for differential checks."""

from .complex_backend import (
    ORACLE_COMPUTATIONS,
    OracleResult,
    oracle_born,
    oracle_correlation,
    oracle_eigen,
    oracle_inner,
    oracle_kron,
    run_oracle,
)

__all__ = [
    "ORACLE_COMPUTATIONS",
    "OracleResult",
    "oracle_born",
    "oracle_correlation",
    "oracle_eigen",
    "oracle_inner",
    "oracle_kron",
    "run_oracle",
]
