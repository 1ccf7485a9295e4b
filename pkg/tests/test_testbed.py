"""Construction and basic algebra of the finite matrix testbed."""

import numpy as np
import pytest

from kreinpert import DimensionError, FiniteTestbed, make_testbed
from kreinpert.testbed import DEFAULT_Z0


def test_spectrum_in_unit_interval():
    tb = make_testbed(30, 3, seed=7)
    assert tb.eigenvalues.min() >= -1.0
    assert tb.eigenvalues.max() <= 1.0


def test_deterministic_from_seed():
    a = make_testbed(12, 2, seed=5)
    b = make_testbed(12, 2, seed=5)
    np.testing.assert_array_equal(a.A, b.A)
    np.testing.assert_array_equal(a.tau, b.tau)


def test_gamma_vanishes_at_anchor():
    tb = make_testbed(20, 2, seed=1)
    assert np.linalg.norm(tb.gamma(DEFAULT_Z0)) < 1e-12


def test_gamma_conjugation_symmetry():
    tb = make_testbed(25, 3, seed=3)
    z = 1.5 + 0.7j
    g = tb.gamma(z)
    gc = tb.gamma(z.conjugate())
    assert np.max(np.abs(g - gc.conj().T)) < 1e-13


def test_gamma_matches_direct_tau_formula():
    # Gamma built column-by-column must equal tau ((G(z0)+G(z0))/2 - G(z))
    tb = make_testbed(15, 2, seed=11)
    z = 0.5 + 2.0j
    g_direct = tb.tau @ (tb.r_matrix(DEFAULT_Z0) - tb.r_matrix(z)) @ tb.tau.conj().T
    assert np.max(np.abs(tb.gamma(z) - g_direct)) < 1e-13


def test_in_resolvent_set():
    tb = make_testbed(10, 1, seed=0)
    assert tb.in_resolvent_set(1.0 + 1.0j)
    assert not tb.in_resolvent_set(complex(tb.eigenvalues[0]))


def test_rejects_bad_shapes():
    with pytest.raises(DimensionError):
        make_testbed(5, 5, seed=0)  # n must be < m
    with pytest.raises(DimensionError):
        make_testbed(300, 1, seed=0)  # m too large
    with pytest.raises(DimensionError):
        FiniteTestbed(np.array([[0.0, 1.0], [0.0, 0.0]]), np.array([[1.0, 0.0]]))
    with pytest.raises(DimensionError):
        # rank-deficient tau
        FiniteTestbed(np.eye(4) * 0.5, np.array([[1.0, 0, 0, 0], [1.0, 0, 0, 0]]))
