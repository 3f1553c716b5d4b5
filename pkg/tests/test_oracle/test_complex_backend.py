"""
Tests for the complex reference backend.
"""

import numpy as np
import pytest

from kahler_qm.core.errors import DimensionMismatchError, NormalizationError, StructureError
from kahler_qm.core.hilbert import ComplexState
from kahler_qm.oracle import (
    ORACLE_COMPUTATIONS,
    oracle_born,
    oracle_correlation,
    oracle_eigen,
    oracle_inner,
    oracle_kron,
    run_oracle,
)


class TestOracleInner:
    """Test suite for oracle_inner."""

    def test_worked_example(self):
        """Test <1 + i, 2 - i> = 1 - 3i."""
        assert oracle_inner(ComplexState([1 + 1j]), ComplexState([2 - 1j])) == pytest.approx(1 - 3j)

    def test_matches_vdot(self, rng):
        """Test against numpy's conjugating dot product."""
        a = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        b = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        assert oracle_inner(ComplexState(a), ComplexState(b)) == pytest.approx(np.vdot(a, b))

    def test_dimension_mismatch(self):
        """Test the dimension check."""
        with pytest.raises(DimensionMismatchError):
            oracle_inner(ComplexState([1.0]), ComplexState([1.0, 0.0]))


class TestOracleEigen:
    """Test suite for oracle_eigen."""

    def test_k4_cross_check_passes(self, k4_operator):
        """Test that the n = 2 cross-check agrees with the closed form."""
        values, vectors = oracle_eigen(k4_operator.complex_matrix())
        np.testing.assert_allclose(values, [-np.sqrt(7.25) / 2, np.sqrt(7.25) / 2])
        assert vectors.shape == (2, 2)

    def test_near_singular_skips_vector_check(self):
        """Test diag(1, 2), where a = 0."""
        values, _ = oracle_eigen(np.diag([1.0, 2.0]).astype(complex))
        np.testing.assert_allclose(values, [1.0, 2.0])

    def test_rejects_non_hermitian(self):
        """Test input validation."""
        with pytest.raises(StructureError, match="Hermitian"):
            oracle_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestOracleBorn:
    """Test suite for oracle_born."""

    def test_degenerate_eigenvalues_merge(self):
        """Test that repeated eigenvalues become one outcome."""
        psi = ComplexState([1.0, 1.0, 1.0]).normalized()
        outcomes = oracle_born(psi, np.diag([2.0, -1.0, 2.0]))
        assert [lam for lam, _ in outcomes] == pytest.approx([-1.0, 2.0])
        assert [p for _, p in outcomes] == pytest.approx([1 / 3, 2 / 3])

    def test_requires_normalized_state(self):
        """Test the normalization check."""
        with pytest.raises(NormalizationError):
            oracle_born(ComplexState([1.0, 1.0]), np.eye(2))

    def test_dimension_mismatch(self):
        """Test the dimension check."""
        with pytest.raises(DimensionMismatchError):
            oracle_born(ComplexState([1.0]), np.eye(2))


class TestOracleMisc:
    """Test suite for kron, correlation and dispatch."""

    def test_kron(self):
        """Test |0> (x) |1> = |01>."""
        result = oracle_kron(ComplexState.basis(2, 0), ComplexState.basis(2, 1))
        np.testing.assert_array_equal(result.entries, [0, 1, 0, 0])

    def test_correlation(self, pauli):
        """Test <sigma_x |0>, |1>> = 1."""
        value = oracle_correlation([pauli["x"]], ComplexState.basis(2, 0), ComplexState.basis(2, 1))
        assert value == 1.0

    def test_correlation_needs_operator(self):
        """Test that k >= 1."""
        with pytest.raises(ValueError, match="k >= 1"):
            oracle_correlation([], ComplexState([1.0]), ComplexState([1.0]))

    def test_run_oracle_tags_result(self):
        """Test dispatch by name."""
        result = run_oracle("inner", ComplexState([1.0]), ComplexState([1j]))
        assert result.computation == "inner"
        assert result.value == 1j

    def test_run_oracle_unknown(self):
        """Test the unknown-name error."""
        with pytest.raises(ValueError, match="Unknown oracle computation"):
            run_oracle("trace")

    def test_registry_names(self):
        """Test the available computations."""
        assert sorted(ORACLE_COMPUTATIONS) == ["born", "correlation", "eigen", "inner", "kron"]
