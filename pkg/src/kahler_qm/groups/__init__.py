"""Kähler unitary group: membership checks, generators and the exponential map."""

from .generators import (
    PRINTED_GENERATORS,
    GeneratorBasis,
    exp_generator,
    g2,
    generator_basis,
    generator_residuals,
    lift_i_times,
    phase_rotation_equivalence,
)
from .membership import (
    MEMBERSHIPS,
    GroupElement,
    check_memberships,
    matrix_from_json,
    membership_residuals,
    symplectic_block_conditions,
)

__all__ = [
    "PRINTED_GENERATORS",
    "GeneratorBasis",
    "exp_generator",
    "g2",
    "generator_basis",
    "generator_residuals",
    "lift_i_times",
    "phase_rotation_equivalence",
    "MEMBERSHIPS",
    "GroupElement",
    "check_memberships",
    "matrix_from_json",
    "membership_residuals",
    "symplectic_block_conditions",
]
