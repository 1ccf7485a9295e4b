"""Separable (v = 0) evaluation of the free and perturbed resolvents.

For Phi = phi (x) varphi with Gaussian factors, the free resolvent of the
d'Alembertian factorizes over the dual time variable h:

    result^(h) = phi^(h) * W_x(h),
    W_x(h) = int_0^inf dR R m(R; x) e^(-R sqrt(-h^2 + z)),

where m(R; x) is the spherical mean of varphi around x.  For Gaussians
both the spherical mean and the R-integral are closed forms (scaled
complementary error function), so the only discretization is the time
grid's Fourier transform.
"""

from __future__ import annotations

import numpy as np
from scipy.special import erfcx

from ..errors import ContractViolation, DomainError, GammaSingularError
from ..spectral import as_z, sqrt_principal
from .config import Gaussian1D, Gaussian3D, LineConfig, MultiplierGrid
from .symbol import FOUR_PI, symbol_samples

_SQRT_2PI = np.sqrt(2.0 * np.pi)


def grid_fft(grid: MultiplierGrid, samples) -> np.ndarray:
    """Discrete approximation of the unitary Fourier transform on the grid."""
    samples = np.asarray(samples, dtype=complex)
    return (grid.spacing / _SQRT_2PI) * np.exp(-1j * grid.h * grid.t[0]) * np.fft.fft(samples)


def grid_ifft(grid: MultiplierGrid, spectrum) -> np.ndarray:
    """Inverse of grid_fft: samples over grid.t from frequency samples."""
    spectrum = np.asarray(spectrum, dtype=complex)
    return (_SQRT_2PI / grid.spacing) * np.fft.ifft(spectrum * np.exp(1j * grid.h * grid.t[0]))


def sqrt_symbol(h_grid, z) -> np.ndarray:
    """sqrt(-h^2 + z) with Re > 0, vectorized (4 pi times the boundary symbol)."""
    return FOUR_PI * symbol_samples(h_grid, z)


def _half_line_gaussian(s, c, width):
    """int_0^inf e^(-s R) e^(-(R - c)^2 / 2 width^2) dR, complex s, Re s > 0."""
    x = (s * width**2 - c) / (width * np.sqrt(2.0))
    return width * np.sqrt(np.pi / 2.0) * np.exp(-(c**2) / (2.0 * width**2)) * erfcx(x)


def radial_profile(z, varphi: Gaussian3D, x, h_grid) -> np.ndarray:
    """W_x(h): the R-integral of the spherical mean of varphi against e^(-sR)."""
    s = sqrt_symbol(h_grid, z)
    w = varphi.width
    rho = float(np.linalg.norm(np.asarray(x, dtype=float) - np.asarray(varphi.center)))
    norm = (np.pi * w**2) ** -0.75
    if rho == 0.0:
        return norm * (w**2 - s * w**3 * np.sqrt(np.pi / 2.0) * erfcx(s * w / np.sqrt(2.0)))
    return (
        norm
        * (w**2 / (2.0 * rho))
        * (_half_line_gaussian(s, rho, w) - _half_line_gaussian(s, -rho, w))
    )


def free_resolvent_samples(z, phi: Gaussian1D, varphi: Gaussian3D,
                           grid: MultiplierGrid, x) -> np.ndarray:
    """Free resolvent of phi (x) varphi sampled over grid.t at spatial point x."""
    z = as_z(z)
    grid.check_padding(phi.width)
    spectrum = phi.hat(grid.h) * radial_profile(z, varphi, x, grid.h)
    return grid_ifft(grid, spectrum)


def free_resolvent_at(z, phi: Gaussian1D, varphi: Gaussian3D,
                      grid: MultiplierGrid, points) -> np.ndarray:
    """Free resolvent at arbitrary spacetime points (t, x1, x2, x3).

    Uses the grid frequencies as the quadrature for the h-integral, so the
    accuracy matches the grid-based route; points need not lie on the grid.
    """
    z = as_z(z)
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != 4:
        raise ContractViolation("points must be rows (t, x1, x2, x3)")
    phat = phi.hat(grid.h)
    dh = 2.0 * np.pi / grid.length
    out = np.empty(len(pts), dtype=complex)
    for i, p in enumerate(pts):
        spec = phat * radial_profile(z, varphi, p[1:], grid.h)
        out[i] = (dh / _SQRT_2PI) * np.sum(spec * np.exp(1j * grid.h * p[0]))
    return out


def gbreve_separable(z, phi: Gaussian1D, varphi: Gaussian3D,
                     grid: MultiplierGrid) -> np.ndarray:
    """Trace of the free resolvent on the line through the origin, over grid.t."""
    return free_resolvent_samples(z, phi, varphi, grid, (0.0, 0.0, 0.0))


def boundary_spectrum(z, theta: float, phi: Gaussian1D, varphi: Gaussian3D,
                      grid: MultiplierGrid) -> np.ndarray:
    """Frequency samples of (theta + symbol)^(-1) applied to the line trace."""
    sym = symbol_samples(grid.h, z)
    denom = theta + sym
    worst = int(np.argmin(np.abs(denom)))
    if np.abs(denom[worst]) <= 1e-10:
        raise GammaSingularError(
            f"theta + symbol vanishes near h = {grid.h[worst]:.6g}",
            smallest_singular_value=float(np.abs(denom[worst])),
        )
    gb = phi.hat(grid.h) * radial_profile(z, varphi, (0.0, 0.0, 0.0), grid.h)
    return gb / denom


def line_resolvent_separable(z, config: LineConfig, phi: Gaussian1D,
                             varphi: Gaussian3D, grid: MultiplierGrid, x) -> np.ndarray:
    """Resolvent of the line-perturbed d'Alembertian, sampled over grid.t at x.

    Only the v = 0 solver exists; a spatial offset y is handled exactly by
    translating the data and the evaluation point (the time offset cancels
    by time-translation invariance).  Moving lines go through the boost
    conjugation route instead.
    """
    z = as_z(z)
    if any(vi != 0.0 for vi in config.v):
        raise ContractViolation("direct solver requires v = 0; use the boost route")
    y_space = np.asarray(config.y[1:], dtype=float)
    varphi_s = Gaussian3D(tuple(np.asarray(varphi.center) - y_space), varphi.width)
    x_s = np.asarray(x, dtype=float) - y_space
    r = float(np.linalg.norm(x_s))
    if r == 0.0:
        raise DomainError("evaluation point lies on the line")

    free = free_resolvent_samples(z, phi, varphi_s, grid, x_s)
    sym = symbol_samples(grid.h, z)
    denom = config.theta + sym
    worst = int(np.argmin(np.abs(denom)))
    if np.abs(denom[worst]) <= 1e-10:
        raise GammaSingularError(
            f"theta + symbol vanishes near h = {grid.h[worst]:.6g}",
            smallest_singular_value=float(np.abs(denom[worst])),
        )
    gb_spec = phi.hat(grid.h) * radial_profile(z, varphi_s, (0.0, 0.0, 0.0), grid.h)
    eta = gb_spec / denom
    s = sqrt_symbol(grid.h, z)
    corr = grid_ifft(grid, eta * np.exp(-s * r) / (FOUR_PI * r))
    return free + corr
