"""Tensor products on Kähler spaces: (x)_R, (x)_K and the projector between them."""

from .identities import IDENTITY_NAMES, bilinear_form_residuals, tensor_bilinear_forms
from .products import (
    RealTensorVector,
    projector_matrix,
    projector_P,
    tensor_K,
    tensor_R,
    tensor_R_metric,
    tensor_R_omega,
)

__all__ = [
    "IDENTITY_NAMES",
    "bilinear_form_residuals",
    "tensor_bilinear_forms",
    "RealTensorVector",
    "projector_matrix",
    "projector_P",
    "tensor_K",
    "tensor_R",
    "tensor_R_metric",
    "tensor_R_omega",
]
