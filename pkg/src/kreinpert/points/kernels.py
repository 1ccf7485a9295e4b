"""Kernels and boundary matrices for 3D point interactions."""

from __future__ import annotations

import numpy as np

from .._kernels import yukawa_matrix
from ..errors import DomainError
from ..spectral import as_z, sqrt_principal
from .config import PointConfig

FOUR_PI = 4.0 * np.pi


def green_kernel(z, x) -> complex:
    """Free Green function G_z(x) = e^(-sqrt(z)|x|) / (4 pi |x|)."""
    s = sqrt_principal(as_z(z))
    r = float(np.linalg.norm(np.asarray(x, dtype=float)))
    if r == 0.0:
        raise DomainError("Green function is singular at x = 0")
    return complex(np.exp(-s * r) / (FOUR_PI * r))


def gamma_matrix(z, config: PointConfig) -> np.ndarray:
    """Boundary matrix Theta + sqrt(z)/4pi on the diagonal, -G_z(y_j - y_k) off it."""
    z = as_z(z)
    s = sqrt_principal(z)
    n = config.n
    g = np.asarray(yukawa_matrix(s, config.centers, config.centers))
    np.fill_diagonal(g, 0.0)
    out = config.theta.entries - g
    out = out + np.eye(n) * (s / FOUR_PI)
    return out


def gamma_derivative_analytic(z, config: PointConfig) -> np.ndarray:
    """d Gamma / dz: 1/(8 pi sqrt(z)) diagonal, e^(-sqrt(z) d)/(8 pi sqrt(z)) off it."""
    s = sqrt_principal(as_z(z))
    d = np.linalg.norm(
        config.centers[:, None, :] - config.centers[None, :, :], axis=-1
    )
    return np.exp(-s * d) / (8.0 * np.pi * s)


def gamma_derivative_check(z, config: PointConfig, h_rel: float = 1e-5) -> float:
    """Residual between a centered finite difference of Gamma and the analytic dGamma/dz."""
    z = as_z(z)
    h = h_rel * abs(z)
    fd = (gamma_matrix(z + h, config) - gamma_matrix(z - h, config)) / (2.0 * h)
    return float(np.linalg.norm(fd - gamma_derivative_analytic(z, config), 2))


def resolvent_kernel(z, config: PointConfig, x, xp) -> complex:
    """Integral kernel of the perturbed resolvent at (x, x').

    Free kernel plus the rank-n correction
    sum_jk G_z(x - y_j) [ (Theta + Gamma(z))^(-1) ]_jk G_z(x' - y_k).
    """
    from ..system import solve_boundary
    from .system import PointKreinSystem

    z = as_z(z)
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    if np.array_equal(x, xp):
        raise DomainError("resolvent kernel is singular on the diagonal x = x'")
    system = PointKreinSystem(config.centers)
    rhs = np.array([green_kernel(z, xp - y) for y in config.centers])
    gx = np.array([green_kernel(z, x - y) for y in config.centers])
    corr = gx @ solve_boundary(system, config.theta, z, rhs)
    return complex(green_kernel(z, x - xp) + corr)
