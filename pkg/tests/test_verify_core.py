"""Property tests for the structural identities on random finite testbeds."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kreinpert import DegenerateInputError, ThetaMatrix, make_testbed
from kreinpert.verify import (
    invertibility_scan,
    semibound_certificate,
    verify_adjoint,
    verify_gamma_difference,
    verify_gbreve_difference,
    verify_pseudo_resolvent,
)

Z_GRID = [1.0 + 1.0j, -0.5 + 2.0j, 3.0 - 1.5j, 0.25 + 0.25j]


def random_theta(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return ThetaMatrix(a + a.conj().T)


@settings(max_examples=12, deadline=None)
@given(
    m=st.integers(6, 40),
    n=st.integers(1, 4),
    seed=st.integers(0, 2**32 - 1),
)
def test_identities_hold_on_random_testbeds(m, n, seed):
    tb = make_testbed(m, n, seed)
    theta = random_theta(n, seed ^ 0xABCD)
    for z, w in zip(Z_GRID, Z_GRID[1:]):
        assert verify_gamma_difference(tb, z, w) < 1e-12
        assert verify_pseudo_resolvent(tb, theta, z, w, n_probes=3, seed=seed) < 1e-12
        assert verify_adjoint(tb, theta, z, n_probes=3, seed=seed) < 1e-12
        assert verify_gbreve_difference(tb, z, w, n_probes=3, seed=seed) < 1e-12


@settings(max_examples=8, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_gamma_hermitian_conjugation(seed):
    tb = make_testbed(20, 3, seed)
    for z in Z_GRID:
        g = tb.gamma(z)
        assert np.max(np.abs(g - tb.gamma(np.conj(z)).conj().T)) < 1e-12


def test_degenerate_spectral_points_rejected():
    tb = make_testbed(10, 2, seed=0)
    theta = random_theta(2, 0)
    with pytest.raises(DegenerateInputError):
        verify_gamma_difference(tb, 1.0j, 1.0j)
    with pytest.raises(DegenerateInputError):
        verify_pseudo_resolvent(tb, theta, 1.0j, 1.0j)


def test_invertibility_scan_flags_real_crossings():
    tb = make_testbed(12, 1, seed=4)
    theta = ThetaMatrix.scalar(0.0)
    recs = invertibility_scan(tb, theta, np.linspace(1.5, 3.0, 40))
    assert all(r.smallest_abs_eigenvalue >= 0 for r in recs)
    # Gamma(z0) = 0 with Theta = 0 is singular exactly at the anchor
    at_anchor = min(recs, key=lambda r: abs(r.lam - 2.0))
    assert not at_anchor.invertible


def test_semibound_certificate_positive_for_dominant_theta():
    tb = make_testbed(15, 2, seed=9)
    grid = np.linspace(3.0, 6.0, 20)
    ok_big, margin_big = semibound_certificate(tb, ThetaMatrix.scalar(50.0, n=2), 3.0, grid)
    assert ok_big and margin_big > 0
    ok_small, margin_small = semibound_certificate(tb, ThetaMatrix.scalar(-50.0, n=2), 3.0, grid)
    assert not ok_small and margin_small < 0
