"""
Tests for the structured and dense spectral solvers.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kahler_qm.core.correspondence import lift_operator
from kahler_qm.core.errors import StructureError
from kahler_qm.core.operators import KahlerOperator
from kahler_qm.spectral import SolverRegistry, decompose


def _random_operator(seed, n):
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((n, n))
    H = rng.standard_normal((n, n))
    return KahlerOperator((G + G.T) / 2, (H - H.T) / 2)


class TestSolverRegistry:
    """Test suite for SolverRegistry."""

    def test_builtin_solvers_registered(self):
        """Test that all three solvers are available."""
        assert SolverRegistry.list_types() == ["closed-form", "dense", "structured"]

    def test_unknown_solver(self):
        """Test the error for an unknown name."""
        with pytest.raises(ValueError, match="Unknown solver: 'qr'"):
            SolverRegistry.create("qr")

    def test_get_info(self):
        """Test solver metadata."""
        info = SolverRegistry.get_info()
        assert info["dense"]["class"] == "DenseSolver"
        assert info["structured"]["doc"]


@pytest.mark.parametrize("method", ["structured", "dense"])
class TestDecompose:
    """Test suite shared by both general solvers."""

    def test_sigma_y(self, method, pauli):
        """Test that lift(sigma_y) has eigenvalues -1 and 1, each twice."""
        result = decompose(lift_operator(pauli["y"]), method)
        np.testing.assert_allclose(result.eigenvalues, [-1.0, 1.0], atol=1e-12)
        assert result.multiplicities == [2, 2]
        assert result.method == method

    def test_identity_is_one_cluster(self, method):
        """Test that I_6 gives a single eigenvalue of multiplicity 6."""
        result = decompose(KahlerOperator.identity(3), method)
        np.testing.assert_allclose(result.eigenvalues, [1.0])
        assert result.multiplicities == [6]
        np.testing.assert_allclose(result.projectors[0], np.eye(6), atol=1e-12)

    def test_degenerate_spectrum(self, method):
        """Test diag(1, 1, 3) lifted: multiplicities 4 and 2."""
        result = decompose(lift_operator(np.diag([1.0, 1.0, 3.0])), method)
        np.testing.assert_allclose(result.eigenvalues, [1.0, 3.0], atol=1e-12)
        assert result.multiplicities == [4, 2]
        assert len(result.pairs[0]) == 2

    def test_rejects_non_k_hermitian(self, method):
        """Test that non-symmetric S is refused before solving."""
        with pytest.raises(StructureError, match="not K-Hermitian"):
            decompose(KahlerOperator([[0.0, 1.0], [0.0, 0.0]], np.zeros((2, 2))), method)

    @pytest.mark.parametrize("n", [1, 2, 5, 12])
    def test_invariants_hold(self, method, n):
        """Test every decomposition invariant on a random operator."""
        L = _random_operator(n, n)
        residuals = decompose(L, method).invariant_residuals(L)
        assert residuals["parity"] == 0.0
        for name, value in residuals.items():
            assert value < 1e-10, name

    def test_frame_split(self, method):
        """Test W^T L W = diag(Lambda, Lambda) and the block exchange."""
        L = _random_operator(7, 4)
        split = decompose(L, method).frame_split()
        for name, value in split.residuals(L).items():
            assert value < 1e-10, name
        assert split.frame.shape == (8, 8)

    def test_to_dict(self, method, k4_operator):
        """Test the JSON layout."""
        data = decompose(k4_operator, method).to_dict()
        assert set(data) == {"eigenvalues", "multiplicities", "projectors"}
        assert data["multiplicities"] == [2, 2]
        assert np.asarray(data["projectors"]).shape == (2, 4, 4)


class TestSolverAgreement:
    """Property tests comparing solvers."""

    @given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=10))
    @settings(max_examples=30, deadline=None)
    def test_dense_matches_structured(self, seed, n):
        """Test identical eigenvalues and projectors from both solvers."""
        L = _random_operator(seed, n)
        structured = decompose(L, "structured")
        dense = decompose(L, "dense")
        scale = 1.0 + L.frobenius_norm()
        np.testing.assert_allclose(
            dense.expanded_eigenvalues(), structured.expanded_eigenvalues(), atol=1e-10 * scale
        )
        np.testing.assert_allclose(dense.reconstruct(), structured.reconstruct(), atol=1e-9 * scale)

    @given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=10))
    @settings(max_examples=30, deadline=None)
    def test_expanded_eigenvalues_match_numpy(self, seed, n):
        """Test each complex eigenvalue appears twice in the real spectrum."""
        L = _random_operator(seed, n)
        expected = np.repeat(np.linalg.eigvalsh(L.complex_matrix()), 2)
        np.testing.assert_allclose(
            decompose(L).expanded_eigenvalues(), expected, atol=1e-10 * (1 + L.frobenius_norm())
        )
