"""
Built-in verification suites.

Importing this package registers every suite with SuiteRegistry, in the
order `verify --suite all` runs them.
"""

from .axioms import AxiomSuite
from .correspondence import CorrespondenceSuite
from .spectral import SpectralSuite
from .tensor import TensorSuite
from .born import BornSuite
from .groups import GroupSuite
from .reconstruction import ReconstructionSuite

__all__ = [
    "AxiomSuite",
    "CorrespondenceSuite",
    "SpectralSuite",
    "TensorSuite",
    "BornSuite",
    "GroupSuite",
    "ReconstructionSuite",
]
