"""
Pytest configuration and shared fixtures for kahler-qm tests.
"""

import json

import numpy as np
import pytest

from kahler_qm.core.hilbert import SIGMA_X, SIGMA_Y, SIGMA_Z
from kahler_qm.core.kahler import KahlerVector
from kahler_qm.core.operators import KahlerOperator
from kahler_qm.spectral import K4Parameters


@pytest.fixture
def rng():
    """Seeded generator so random fixtures are reproducible."""
    return np.random.Generator(np.random.PCG64(12345))


@pytest.fixture
def pauli():
    """The three Pauli matrices keyed by axis."""
    return {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}


@pytest.fixture
def random_vector(rng):
    """Factory for g-normalized random Kähler vectors."""
    def make(n):
        return KahlerVector(rng.standard_normal(n), rng.standard_normal(n)).normalized()
    return make


@pytest.fixture
def random_operator(rng):
    """Factory for random K-Hermitian operators."""
    def make(n):
        G = rng.standard_normal((n, n))
        H = rng.standard_normal((n, n))
        return KahlerOperator((G + G.T) / 2, (H - H.T) / 2)
    return make


@pytest.fixture
def k4_params():
    """A generic K^4 parameter set with |a| well away from zero."""
    return K4Parameters(s11=1.0, s12=0.5, s22=-1.0, a=0.75)


@pytest.fixture
def k4_operator(k4_params):
    """The operator [[S, -A], [A, S]] for k4_params."""
    return k4_params.operator()


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path
    return write
