"""Free-resolvent action on Gaussian probes against quadrature oracles."""

import numpy as np

from kreinpert import ThetaMatrix
from kreinpert.points import (
    FourierRadialState,
    PointConfig,
    free_resolvent_gaussian,
    gbreve_gaussian,
)


def test_value_matches_green_pairing_oracle():
    # (R(z) g)(y) = <G_{z*}(. - y), g>, with the pairing forced through
    # adaptive quadrature as the independent route
    z = 2.0 + 1.0j
    center, width = (0.4, -0.2, 0.7), 0.9
    y = np.array([1.0, 0.3, -0.5])
    direct = free_resolvent_gaussian(z, center, width, y)
    g = FourierRadialState.gaussian(center, width)
    probe = FourierRadialState.green(np.conj(z), tuple(y))
    oracle = probe.pair(g, force_numeric=True)
    assert abs(direct - oracle) < 1e-9


def test_translation_invariance():
    z = 1.5 + 0.5j
    shift = np.array([0.7, -1.1, 0.4])
    a = free_resolvent_gaussian(z, (0.0, 0.0, 0.0), 1.2, (0.5, 0.2, 0.1))
    b = free_resolvent_gaussian(z, tuple(shift), 1.2, np.array([0.5, 0.2, 0.1]) + shift)
    assert abs(a - b) < 1e-12


def test_wide_gaussian_limit():
    # for widths >> 1/sqrt(z) the resolvent acts like multiplication by 1/z
    z = 4.0 + 0.0j
    width = 10.0
    g = FourierRadialState.gaussian((0.0, 0.0, 0.0), width)
    val = free_resolvent_gaussian(z, (0.0, 0.0, 0.0), width, (0.0, 0.0, 0.0))
    g0 = g.eval_at((0.0, 0.0, 0.0))
    assert abs(val * z / g0 - 1.0) < 0.01


def test_gbreve_matches_pointwise_values():
    cfg = PointConfig(
        [[0.0, 0.0, 0.0], [1.0, 0.5, 0.0]], ThetaMatrix.scalar(0.1, n=2)
    )
    z = 2.0 - 1.0j
    vec = gbreve_gaussian(z, cfg, (0.2, 0.0, 0.3), 1.1)
    for i, y in enumerate(cfg.centers):
        assert abs(vec[i] - free_resolvent_gaussian(z, (0.2, 0.0, 0.3), 1.1, y)) < 1e-12
