"""
Tests for group membership checks.
"""

import numpy as np
import pytest

from kahler_qm.core.correspondence import lift_operator
from kahler_qm.core.errors import StructureError
from kahler_qm.core.kahler import J_matrix
from kahler_qm.groups import (
    MEMBERSHIPS,
    GroupElement,
    check_memberships,
    matrix_from_json,
    membership_residuals,
    symplectic_block_conditions,
)
from kahler_qm.verification.sampling import orthogonal_counterexample, random_unitary


def _lifted_unitary(n, seed):
    return lift_operator(random_unitary(np.random.default_rng(seed), n)).matrix()


class TestCheckMemberships:
    """Test suite for check_memberships."""

    @pytest.mark.parametrize("n", [1, 2, 4, 8])
    def test_lifted_unitary_is_in_every_group(self, n):
        """Test that lifts of U(n) satisfy all four memberships."""
        assert check_memberships(_lifted_unitary(n, n)) == frozenset(MEMBERSHIPS)

    def test_J_is_in_every_group(self):
        """Test the complex structure itself."""
        assert check_memberships(J_matrix(3)) == frozenset(MEMBERSHIPS)

    def test_orthogonal_counterexample(self):
        """Test that block-diag(R1, R2) with R1 != R2 is only orthogonal."""
        M = orthogonal_counterexample(np.random.default_rng(1), 3)
        assert check_memberships(M) == frozenset({"orthogonal"})

    def test_symplectic_shear_is_not_orthogonal(self):
        """Test [[I, I], [0, I]] is symplectic only."""
        M = np.block([[np.eye(2), np.eye(2)], [np.zeros((2, 2)), np.eye(2)]])
        assert check_memberships(M) == frozenset({"symplectic"})

    def test_scaled_identity_commutes_only(self):
        """Test 2I commutes with J but preserves nothing."""
        assert check_memberships(2 * np.eye(4)) == frozenset({"j_commuting"})

    def test_rejects_odd_dimension(self):
        """Test 2n x 2n is required."""
        with pytest.raises(ValueError, match="even dimension"):
            check_memberships(np.eye(3))

    def test_rejects_non_square(self):
        """Test square input is required."""
        with pytest.raises(ValueError, match="square"):
            membership_residuals(np.zeros((2, 4)))


class TestSymplecticBlockConditions:
    """Test suite for the X, Y block identities."""

    def test_hold_for_lifted_unitary(self):
        """Test all four block identities on a lifted unitary."""
        for name, residual in symplectic_block_conditions(_lifted_unitary(3, 5)).items():
            assert residual < 1e-12, name

    def test_fail_for_shear(self):
        """Test that a non-unitary matrix breaks them."""
        M = np.block([[np.eye(2), np.eye(2)], [np.zeros((2, 2)), np.eye(2)]])
        assert symplectic_block_conditions(M)["XtX_plus_YtY"] > 0.5


class TestGroupElement:
    """Test suite for GroupElement."""

    def test_verified_claims_everything_that_holds(self):
        """Test verified() on J."""
        element = GroupElement.verified(J_matrix(2))
        assert element.claimed_memberships == frozenset(MEMBERSHIPS)
        assert element.n == 2

    def test_false_claim_is_rejected(self):
        """Test that claiming symplectic for 2I fails."""
        with pytest.raises(StructureError, match="symplectic"):
            GroupElement(2 * np.eye(4), ["symplectic"])

    def test_unknown_claim(self):
        """Test that unknown group names are refused."""
        with pytest.raises(ValueError, match="Unknown memberships: lorentz"):
            GroupElement(np.eye(2), ["lorentz"])

    def test_product_and_inverse_stay_in_group(self):
        """Test closure under products and inverses."""
        a = GroupElement(_lifted_unitary(2, 1), MEMBERSHIPS)
        b = GroupElement(_lifted_unitary(2, 2), MEMBERSHIPS)
        assert (a @ b).claimed_memberships == frozenset(MEMBERSHIPS)
        assert a.inverse().claimed_memberships == frozenset(MEMBERSHIPS)

    def test_product_keeps_common_claims(self):
        """Test that products claim only what both factors claim."""
        a = GroupElement(J_matrix(1), ["orthogonal", "symplectic"])
        b = GroupElement(np.eye(2), ["orthogonal"])
        assert (a @ b).claimed_memberships == frozenset({"orthogonal"})

    def test_matrix_is_read_only(self):
        """Test that the stored matrix is frozen."""
        element = GroupElement(np.eye(2))
        with pytest.raises(ValueError):
            element.M[0, 0] = 2.0

    def test_to_dict(self):
        """Test the JSON layout."""
        data = GroupElement.verified(J_matrix(1)).to_dict()
        assert data["n"] == 1
        assert data["memberships"] == sorted(MEMBERSHIPS)
        assert list(data["residuals"]) == list(MEMBERSHIPS)


class TestMatrixFromJson:
    """Test suite for matrix_from_json."""

    def test_object_form(self):
        """Test {"matrix": [[...]]}."""
        np.testing.assert_array_equal(matrix_from_json({"matrix": [[1, 0], [0, 1]]}), np.eye(2))

    def test_bare_array(self):
        """Test a bare nested list."""
        assert matrix_from_json([[0, -1], [1, 0]]).shape == (2, 2)

    def test_missing_field(self):
        """Test an object without 'matrix'."""
        with pytest.raises(ValueError, match="'matrix' field"):
            matrix_from_json({"M": [[1]]})
