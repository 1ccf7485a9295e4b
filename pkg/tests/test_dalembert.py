"""Symbol, separable resolvent, and structural identities of the line model."""

import numpy as np
import pytest

from kreinpert import BranchCutError, ContractViolation, DomainError
from kreinpert.dalembert import (
    Gaussian1D,
    Gaussian3D,
    LineConfig,
    MultiplierGrid,
    adjoint_pairing_residual,
    free_resolvent_at,
    free_resolvent_samples,
    gamma_symbol,
    gbreve_separable,
    grid_fft,
    grid_ifft,
    line_resolvent_separable,
    pseudo_resolvent_residual,
    radial_profile,
    symbol_difference_check,
    symbol_lower_bound,
    symbol_samples,
)

Z_GRID = [1.0 + 1.0j, 2.0 - 0.5j, 0.5 + 3.0j, -1.0 + 2.0j, 4.0 + 0.25j]
W_GRID = [3.0 + 2.0j, -0.5 - 1.0j, 1.5 + 0.5j, 2.5 - 2.0j, 0.25 + 4.0j]
H_GRID = [0.0, 1.0, 2.5]


def default_setup():
    return Gaussian1D(0.0, 1.0), Gaussian3D((0.0, 0.0, 0.0), 1.0), MultiplierGrid(1024, 0.05)


def test_symbol_at_zero_frequency():
    z = 4.0 + 1.0j
    assert abs(gamma_symbol(0.0, z) - np.sqrt(z) / (4.0 * np.pi)) < 1e-15


def test_symbol_conjugation_exact():
    for z in Z_GRID:
        for h in H_GRID:
            assert abs(gamma_symbol(h, np.conj(z)) - np.conj(gamma_symbol(h, z))) <= 1e-15


def test_symbol_difference_identity_on_grid():
    for z in Z_GRID:
        for w in W_GRID:
            for h in H_GRID:
                assert symbol_difference_check(h, z, w) < 1e-8


def test_symbol_branch_cut_detected():
    with pytest.raises(BranchCutError):
        symbol_samples(np.array([0.0, 3.0]), 4.0)  # 4 - 9 < 0 on the real axis


def test_symbol_lower_bound_positive():
    grid = MultiplierGrid(256, 0.1)
    assert symbol_lower_bound(1.0, grid.h, 2.0j) > 1.0


def test_grid_fft_roundtrip_and_gaussian_spectrum():
    phi, _, grid = default_setup()
    samples = phi(grid.t).astype(complex)
    np.testing.assert_allclose(grid_ifft(grid, grid_fft(grid, samples)), samples, atol=1e-12)
    np.testing.assert_allclose(grid_fft(grid, samples), phi.hat(grid.h), atol=1e-12)


def test_radial_profile_matches_quadrature_oracle():
    # independent route: spherical mean by angular quadrature, then a dense
    # Gauss-Legendre R-integral against e^{-sR}
    z = 2.0j
    varphi = Gaussian3D((0.3, 0.0, 0.0), 0.8)
    x = np.array([0.9, 0.4, -0.1])
    hs = np.array([0.0, 0.7, 1.9])
    got = radial_profile(z, varphi, x, hs)

    ug, uw = np.polynomial.legendre.leggauss(80)
    rg, rw = np.polynomial.legendre.leggauss(400)
    rr = 0.5 * 20.0 * (rg + 1.0)
    rwts = 0.5 * 20.0 * rw
    rho = np.linalg.norm(x - np.asarray(varphi.center))
    w = varphi.width
    # spherical mean around x: average of varphi over |y - x| = R, which for
    # an isotropic Gaussian depends only on dist^2 = R^2 + rho^2 + 2 R rho u
    means = np.array([
        0.5 * np.sum(
            uw * (np.pi * w**2) ** -0.75
            * np.exp(-(R**2 + rho**2 + 2.0 * R * rho * ug) / (2.0 * w**2))
        )
        for R in rr
    ])
    oracle = np.empty(len(hs), dtype=complex)
    for i, h in enumerate(hs):
        s = np.sqrt(z - h * h + 0.0j)
        oracle[i] = np.sum(rwts * rr * means * np.exp(-s * rr))
    np.testing.assert_allclose(got, oracle, atol=1e-10)


def test_free_resolvent_routes_agree():
    phi, varphi, grid = default_setup()
    z = 2.0j
    x = (0.5, 0.2, -0.1)
    samples = free_resolvent_samples(z, phi, varphi, grid, x)
    idx = [100, grid.n // 2, 800]
    pts = np.array([[grid.t[i], *x] for i in idx])
    direct = free_resolvent_at(z, phi, varphi, grid, pts)
    np.testing.assert_allclose(direct, samples[idx], atol=1e-10)


def test_gbreve_is_line_trace():
    phi, varphi, grid = default_setup()
    z = 1.0 + 1.0j
    np.testing.assert_allclose(
        gbreve_separable(z, phi, varphi, grid),
        free_resolvent_samples(z, phi, varphi, grid, (0.0, 0.0, 0.0)),
        atol=0.0,
    )


def test_translation_covariance_of_line_resolvent():
    phi, varphi, grid = default_setup()
    z = 2.0j
    shift = np.array([0.4, -0.6, 0.3])
    cfg0 = LineConfig(theta=0.7)
    cfg1 = LineConfig(y=(0.0, *shift), theta=0.7)
    x = np.array([0.8, 0.1, -0.2])
    a = line_resolvent_separable(z, cfg1, phi, Gaussian3D(tuple(np.array(varphi.center) + shift), varphi.width), grid, x + shift)
    b = line_resolvent_separable(z, cfg0, phi, varphi, grid, x)
    assert np.max(np.abs(a - b)) < 1e-12


def test_moving_line_requires_boost_route():
    phi, varphi, grid = default_setup()
    with pytest.raises(ContractViolation):
        line_resolvent_separable(2.0j, LineConfig(v=(0.3, 0, 0), theta=1.0), phi, varphi, grid, (0.5, 0, 0))
    with pytest.raises(DomainError):
        line_resolvent_separable(2.0j, LineConfig(theta=1.0), phi, varphi, grid, (0.0, 0.0, 0.0))


def test_dominant_theta_decay():
    phi, varphi, grid = default_setup()
    z = 2.0j
    x = (0.5, 0.0, 0.0)
    free = free_resolvent_samples(z, phi, varphi, grid, x)
    thetas = np.array([1e2, 1e4, 1e6])
    norms = [
        np.linalg.norm(line_resolvent_separable(z, LineConfig(theta=t), phi, varphi, grid, x) - free)
        for t in thetas
    ]
    slope = np.polyfit(np.log(thetas), np.log(norms), 1)[0]
    assert abs(slope + 1.0) < 0.05


def test_pseudo_resolvent_identity():
    phi, varphi, grid = default_setup()
    cfg = LineConfig(theta=0.7)
    res = pseudo_resolvent_residual(2.0j, 1.0 + 1.0j, cfg, phi, varphi, grid, (0.5, 0.1, 0.0))
    assert res < 1e-4


def test_adjoint_pairing_identity():
    phi, varphi, grid = default_setup()
    cfg = LineConfig(theta=0.7)
    res = adjoint_pairing_residual(
        2.0j, cfg, phi, varphi, Gaussian1D(0.3, 0.8), Gaussian3D((0.0, 0.4, 0.0), 1.2), grid
    )
    assert res < 1e-5


def test_config_validation():
    with pytest.raises(ContractViolation):
        LineConfig(v=(1.0, 0.0, 0.0))
    with pytest.raises(Exception):
        MultiplierGrid(100, 0.05)  # not a power of two >= 256
