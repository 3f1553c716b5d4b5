"""
Tests for the closed-form K^2 and K^4 solutions.
"""

import numpy as np
import pytest

from kahler_qm.core.correspondence import gamma
from kahler_qm.core.kahler import KahlerVector, apply_J, metric_g
from kahler_qm.core.operators import KahlerOperator
from kahler_qm.spectral import (
    K4Parameters,
    closed_form_eigenvectors_n2,
    decompose,
    eigen_closed_form_n1,
    unpaired_basis_n2,
    repaired_basis_n2,
)
from kahler_qm.verification.sampling import small_coupling_k4_parameters

KAPPA = np.sqrt(7.25)


class TestK4Parameters:
    """Test suite for the K^4 parametrization."""

    def test_kappa(self, k4_params):
        """Test kappa = sqrt(4a^2 + (s11 - s22)^2 + 4 s12^2)."""
        assert k4_params.kappa == pytest.approx(KAPPA)

    def test_eigenvalues(self, k4_params):
        """Test lambda = (-/+ kappa + s11 + s22) / 2."""
        lam1, lam2 = k4_params.eigenvalues()
        assert lam1 == pytest.approx(-KAPPA / 2)
        assert lam2 == pytest.approx(KAPPA / 2)

    def test_operator_round_trip(self, k4_params):
        """Test from_operator(operator()) is the identity."""
        assert K4Parameters.from_operator(k4_params.operator()) == k4_params

    def test_from_operator_needs_n2(self):
        """Test the dimension guard."""
        with pytest.raises(ValueError, match="n=2"):
            K4Parameters.from_operator(KahlerOperator.identity(3))

    def test_singularity(self):
        """Test the |a| threshold."""
        assert K4Parameters(1.0, 0.0, 2.0, 1e-12).is_singular()
        assert not K4Parameters(1.0, 0.0, 2.0, 0.1).is_singular()


class TestClosedFormEigenvectors:
    """Test suite for V1 and V2."""

    def test_eigenvector_equations(self, k4_params, k4_operator):
        """Test L V_k = lambda_k V_k."""
        lams = k4_params.eigenvalues()
        for lam, v in zip(lams, closed_form_eigenvectors_n2(k4_params)):
            residual = k4_operator.apply(v) - lam * v
            assert np.linalg.norm(residual.stacked()) < 1e-12

    def test_normalized_and_orthogonal(self, k4_params):
        """Test g(V_k, V_k) = 1 and V1 orthogonal to V2 and JV2."""
        v1, v2 = closed_form_eigenvectors_n2(k4_params)
        assert metric_g(v1, v1) == pytest.approx(1.0)
        assert metric_g(v2, v2) == pytest.approx(1.0)
        assert metric_g(v1, v2) == pytest.approx(0.0, abs=1e-12)
        assert metric_g(v1, apply_J(v2)) == pytest.approx(0.0, abs=1e-12)

    def test_matches_complex_eigenvectors(self, k4_params, k4_operator):
        """Test gamma(V_k) is an eigenvector of S + iA."""
        H = k4_operator.complex_matrix()
        for lam, v in zip(k4_params.eigenvalues(), closed_form_eigenvectors_n2(k4_params)):
            psi = gamma(v).entries
            np.testing.assert_allclose(H @ psi, lam * psi, atol=1e-12)

    def test_undefined_at_zero_a(self):
        """Test that a = 0 has no closed-form eigenvectors."""
        with pytest.raises(ZeroDivisionError):
            closed_form_eigenvectors_n2(K4Parameters(1.0, 0.0, 2.0, 0.0))


class TestClosedFormSolver:
    """Test suite for the closed-form solver."""

    def test_n1(self):
        """Test that K^2 operators are multiples of the identity."""
        L = KahlerOperator([[2.5]], [[0.0]])
        result = eigen_closed_form_n1(L)
        np.testing.assert_allclose(result.eigenvalues, [2.5])
        assert result.multiplicities == [2]

    def test_n2_matches_structured(self, k4_operator):
        """Test agreement with the numerical solver."""
        closed = decompose(k4_operator, "closed-form")
        structured = decompose(k4_operator, "structured")
        assert closed.method == "closed-form"
        np.testing.assert_allclose(closed.eigenvalues, structured.eigenvalues, atol=1e-12)
        np.testing.assert_allclose(closed.reconstruct(), k4_operator.matrix(), atol=1e-12)

    def test_n2_invariants(self, k4_operator):
        """Test the decomposition invariants for the closed form."""
        residuals = decompose(k4_operator, "closed-form").invariant_residuals(k4_operator)
        for name, value in residuals.items():
            assert value < 1e-12, name

    def test_fallback_for_identity(self):
        """Test that a = 0 uses the structured fallback."""
        result = decompose(KahlerOperator.identity(2), "closed-form")
        assert result.method == "closed-form/fallback"
        np.testing.assert_allclose(result.eigenvalues, [1.0])
        assert result.multiplicities == [4]

    def test_fallback_near_singular(self):
        """Test the fallback for tiny nonzero a."""
        L = K4Parameters(1.0, 0.3, -0.5, 1e-12).operator()
        result = decompose(L, "closed-form")
        assert result.method == "closed-form/fallback"
        assert result.invariant_residuals(L)["reconstruction"] < 1e-12

    def test_rejects_large_n(self):
        """Test that only n = 1 and n = 2 are handled."""
        with pytest.raises(ValueError, match="n=1 and n=2 only"):
            decompose(KahlerOperator.identity(3), "closed-form")


class TestSymbolicBasis:
    """Test suite for the U1..U4 basis and its repair."""

    def test_u_vectors_are_eigenvectors(self, k4_params, k4_operator):
        """Test U1, U2 for lambda_1 and U3, U4 for lambda_2."""
        lam1, lam2 = k4_params.eigenvalues()
        for lam, u in zip([lam1, lam1, lam2, lam2], unpaired_basis_n2(k4_params)):
            residual = k4_operator.apply(u) - lam * u
            assert np.linalg.norm(residual.stacked()) < 1e-12

    def test_u_basis_is_not_orthonormal(self, k4_params):
        """Test the Gram matrix of U1..U4 is not the identity."""
        stacked = np.column_stack([u.stacked() for u in unpaired_basis_n2(k4_params)])
        assert np.linalg.norm(stacked.T @ stacked - np.eye(4)) > 0.1

    def test_repaired_basis_is_J_paired(self, k4_params):
        """Test the repaired basis pairs each vector with J of itself."""
        u1, ju1, u3, ju3 = repaired_basis_n2(k4_params)
        assert ju1 == apply_J(u1)
        assert ju3 == apply_J(u3)
        assert metric_g(u1, ju1) == 0.0
        assert metric_g(u1, u3) == pytest.approx(0.0, abs=1e-12)

    def test_repaired_basis_after_normalization_is_orthonormal(self, k4_params):
        """Test that normalizing the repaired basis gives an orthonormal frame."""
        vectors = [v.normalized() for v in repaired_basis_n2(k4_params)]
        W = np.column_stack([v.stacked() for v in vectors])
        np.testing.assert_allclose(W.T @ W, np.eye(4), atol=1e-12)

    def test_u2_is_not_J_of_u1(self, k4_params):
        """Test the defect the repair addresses."""
        u1, u2, _, _ = unpaired_basis_n2(k4_params)
        assert not apply_J(u1).allclose(u2.normalized() * np.sqrt(u1.norm_sq()), atol=1e-6)


class TestSmallCoupling:
    """Test suite for |a| just above the fallback threshold."""

    @pytest.mark.parametrize("a", [1e-7, 1e-6, 1e-5, -1e-7])
    def test_closed_form_path_keeps_invariants(self, a):
        """Test reconstruction and eigen residuals stay below 1e-10 for small a."""
        L = K4Parameters(1.0, 0.0, -1.0, a).operator()
        result = decompose(L, "closed-form")
        assert result.method == "closed-form"
        residuals = result.invariant_residuals(L)
        assert residuals["reconstruction"] < 1e-10
        assert residuals["eigen_residual"] < 1e-10

    @pytest.mark.parametrize("s11, s22", [(1.0, -1.0), (-1.0, 1.0), (0.5, 0.5)])
    def test_w_roots_obey_product_identity(self, s11, s22):
        """Test w_plus * w_minus = -(1 + w0^2) on both signs of s11 - s22."""
        params = K4Parameters(s11, 0.3, s22, 1e-6)
        w_minus, w_plus, w0 = params.w_values()
        assert w_plus * w_minus == pytest.approx(-(1 + w0 ** 2), rel=1e-12)

    def test_eigenvectors_for_small_a(self):
        """Test L V_k = lambda_k V_k when a is tiny."""
        params = K4Parameters(1.0, 0.2, -1.0, 1e-7)
        L = params.operator()
        for lam, v in zip(params.eigenvalues(), closed_form_eigenvectors_n2(params)):
            assert np.linalg.norm((L.apply(v) - lam * v).stacked()) < 1e-10

    def test_sampler_stays_on_closed_form_path(self, rng):
        """Test small-coupling samples never trigger the fallback."""
        for _ in range(50):
            params = small_coupling_k4_parameters(rng)
            assert not params.is_singular()
            assert abs(params.a) < 1e-4


class TestRepresentativeConvention:
    """Test suite for the phase of closed-form representatives."""

    def test_first_coordinate_positive(self, k4_params):
        """Test the first significant complex coordinate is real and positive."""
        for v in closed_form_eigenvectors_n2(k4_params):
            psi = gamma(v).entries
            assert psi[0].real > 0
            assert psi[0].imag == pytest.approx(0.0, abs=1e-15)

    def test_vectors_match_structured_solver(self, k4_operator):
        """Test the closed form and the structured solver pick the same vectors."""
        closed = decompose(k4_operator, "closed-form")
        structured = decompose(k4_operator, "structured")
        for c, s in zip(closed.pairs, structured.pairs):
            np.testing.assert_allclose(c[0][0].stacked(), s[0][0].stacked(), atol=1e-12)
            np.testing.assert_allclose(c[0][1].stacked(), s[0][1].stacked(), atol=1e-12)
