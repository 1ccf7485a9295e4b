"""Bound states of point interactions against independent analytic oracles."""

import numpy as np
import pytest
from scipy.optimize import brentq

from kreinpert import IntervalError, ResolutionWarning, ThetaMatrix
from kreinpert.points import PointConfig, bound_states, eigenfunction_eval

ALPHA = -1.0 / (4.0 * np.pi)


def single_config(alpha):
    return PointConfig([[0.0, 0.0, 0.0]], ThetaMatrix.scalar(alpha))


def pair_config(alpha=ALPHA, d=1.0):
    return PointConfig([[0.0, 0.0, 0.0], [d, 0.0, 0.0]], ThetaMatrix.scalar(alpha, n=2))


def test_single_attractive_center():
    # alpha + sqrt(z)/4pi = 0  =>  z* = (4 pi alpha)^2 = 1
    states = bound_states(single_config(ALPHA), (0.1, 10.0))
    assert len(states) == 1
    assert abs(states[0].z_star - 1.0) < 1e-10
    assert states[0].multiplicity == 1


def test_single_repulsive_center_has_none():
    assert bound_states(single_config(0.1), (0.01, 100.0)) == []


def test_pair_matches_scalar_bisection():
    # symmetric branch: alpha + s/4pi - e^{-s}/4pi = 0 with s = sqrt(z),
    # i.e. s = 1 + e^{-s} for alpha = -1/(4 pi)
    s_star = brentq(lambda s: s - 1.0 - np.exp(-s), 0.5, 3.0, xtol=1e-14)
    states = bound_states(pair_config(), (0.01, 10.0))
    assert len(states) == 1
    assert abs(states[0].z_star - s_star**2) < 1e-8


def test_pair_kernel_vector_symmetric():
    states = bound_states(pair_config(), (0.01, 10.0))
    c = states[0].coefficients
    # the antisymmetric branch (s = 1 - e^{-s} shifted by alpha) has no root,
    # so the single state must carry the symmetric vector
    assert abs(abs(c[0]) - abs(c[1])) < 1e-8
    assert abs(c[0] - c[1]) < 1e-8 * abs(c[0]) or abs(c[0] + c[1]) > 1.0


def test_scaling_law():
    base = bound_states(pair_config(), (0.01, 10.0))[0].z_star
    for s in (0.5, 2.0):
        cfg = PointConfig(
            [[0.0, 0.0, 0.0], [s, 0.0, 0.0]], ThetaMatrix.scalar(ALPHA / s, n=2)
        )
        scaled = bound_states(cfg, (0.01 / s**2, 10.0 / s**2))[0].z_star
        assert abs(scaled - base / s**2) < 1e-8


def test_eigenfunction_symmetric_under_center_swap():
    cfg = pair_config()
    state = bound_states(cfg, (0.01, 10.0))[0]
    a = eigenfunction_eval(state, cfg, (0.5 + 0.3, 0.2, 0.0))
    b = eigenfunction_eval(state, cfg, (0.5 - 0.3, 0.2, 0.0))
    assert abs(a - b) < 1e-12


def test_interval_validation():
    cfg = single_config(ALPHA)
    with pytest.raises(IntervalError):
        bound_states(cfg, (-1.0, 10.0))
    with pytest.raises(IntervalError):
        bound_states(cfg, (5.0, 1.0))
    with pytest.raises(IntervalError):
        bound_states(cfg, (0.1, 10.0), resolution=8)


def test_near_degenerate_curves_warn():
    # far-separated centers: the two eigenvalue curves collapse onto each
    # other at large lambda, so sorted-order tracking is ambiguous
    cfg = pair_config(d=20.0)
    with pytest.warns(ResolutionWarning):
        bound_states(cfg, (0.1, 100.0))
