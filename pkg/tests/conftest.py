"""Shared helpers for the test suite."""

import numpy as np
import pytest

from subcss import Subspace, SubsystemCode


def random_subspace(rng, p, ambient):
    """A random subspace of F_p^ambient with dimension drawn uniformly."""
    dim = int(rng.integers(0, ambient + 1))
    rows = rng.integers(0, p, size=(dim, ambient))
    return Subspace.span(rows, p, ambient)


def random_gauge_code(rng, p, n):
    """A random SubsystemCode over F_p^{2n}."""
    dim = int(rng.integers(0, 2 * n + 1))
    rows = rng.integers(0, p, size=(dim, 2 * n))
    return SubsystemCode(p, n, Subspace.span(rows, p, 2 * n))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
