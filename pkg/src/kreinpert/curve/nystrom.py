"""Nystrom discretization of the regularized boundary operator on a curve.

The operator acts on functions along the curve as

    f  |->  int (f(t) - f(s)) G_z(gamma(t) - gamma(s)) ds  +  c(t) f(t),

    c(t) = log(1/eps)/(2 pi)
           + int [ chi_eps(t,s) / (4 pi |t-s|)  -  G_z(gamma(t) - gamma(s)) ] ds,

with G_z the free 3D Green function and chi_eps the indicator of arclength
separation <= eps.  The eps-dependence cancels exactly; the matrices are
quadrature-limited to ~1e-7 entrywise.  Off-diagonal entries use trapezoid
(periodic) or midpoint (open) weights; the diagonal scalar c(t) is an
adaptive quadrature, with the integrable s -> t singularity replaced by its
series limit sqrt(z)/(4 pi) in a tiny window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .._kernels import yukawa_matrix
from ..errors import DegenerateInputError, EpsilonRangeError
from ..spectral import as_z, sqrt_principal
from .model import CurveModel

FOUR_PI = 4.0 * np.pi

#: |t - s| below which the singular difference is replaced by its limit
_SERIES_WINDOW = 1e-7


@dataclass(frozen=True)
class GammaNystrom:
    """Discretized boundary operator at one spectral point."""

    matrix: np.ndarray
    z: complex
    epsilon: float
    weights: np.ndarray
    curve: CurveModel

    def hermitian_residual(self) -> float:
        """Max-entry deviation from (weighted) Hermitian symmetry."""
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))


def _quad_complex(f, a, b, **kw):
    re = quad(lambda x: f(x).real, a, b, **kw)[0]
    im = quad(lambda x: f(x).imag, a, b, **kw)[0]
    return re + 1j * im


def diagonal_scalar(z, curve: CurveModel, t: float, eps: float) -> complex:
    """c(t): the regularized self-interaction constant at arclength t."""
    z = as_z(z)
    s_root = sqrt_principal(z)
    p = curve.point(t)

    def integrand(v):
        # v = s - t, relative arclength
        u = abs(v) if not curve.closed else min(abs(v), curve.L - abs(v))
        if u < _SERIES_WINDOW:
            return s_root / FOUR_PI
        d = np.linalg.norm(curve.point(t + v) - p)
        val = -np.exp(-s_root * d) / (FOUR_PI * d)
        if u <= eps:
            val += 1.0 / (FOUR_PI * u)
        return val

    if curve.closed:
        lo, hi = -0.5 * curve.L, 0.5 * curve.L
    else:
        lo, hi = -t, curve.L - t
    breaks = sorted({lo, hi, max(lo, -eps), 0.0, min(hi, eps)})
    total = 0.0 + 0.0j
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b > a:
            total += _quad_complex(integrand, a, b, epsabs=1e-12, epsrel=1e-12, limit=200)
    return np.log(1.0 / eps) / (2.0 * np.pi) + total


def build_gamma_tilde(z, curve: CurveModel, eps: float) -> GammaNystrom:
    """Nystrom matrix of the regularized boundary operator."""
    z = as_z(z)
    eps = float(eps)
    if not 0.0 < eps < curve.L / 4.0:
        raise EpsilonRangeError(f"need 0 < eps < L/4 = {curve.L / 4.0:.6g}, got {eps}")
    s_root = sqrt_principal(z)
    h = curve.h
    g = np.asarray(yukawa_matrix(s_root, curve.points, curve.points))
    np.fill_diagonal(g, 0.0)
    m = -h * g
    row_sums = h * np.sum(g, axis=1)
    d = np.linalg.norm(curve.points[:, None, :] - curve.points[None, :, :], axis=-1)
    # rotationally symmetric discretizations (circulant chord matrix) share
    # one self-interaction constant; skip the per-node adaptive quadratures
    circulant = curve.closed and all(
        np.allclose(d[i], np.roll(d[0], i), rtol=0.0, atol=1e-12 * curve.L)
        for i in range(1, curve.N)
    )
    if circulant:
        diag = row_sums + diagonal_scalar(z, curve, curve.nodes[0], eps)
    else:
        diag = row_sums + np.array(
            [diagonal_scalar(z, curve, t, eps) for t in curve.nodes]
        )
    np.fill_diagonal(m, diag)
    return GammaNystrom(m, z, eps, np.full(curve.N, h), curve)


def difference_kernel(z, w, d):
    """(e^(-sqrt(w) d) - e^(-sqrt(z) d)) / (4 pi d), continued across d = 0."""
    sz, sw = sqrt_principal(as_z(z)), sqrt_principal(as_z(w))
    d = np.asarray(d, dtype=float)
    out = np.full(d.shape, (sz - sw) / FOUR_PI, dtype=complex)
    nz = d > 0.0
    out[nz] = (np.exp(-sw * d[nz]) - np.exp(-sz * d[nz])) / (FOUR_PI * d[nz])
    return out


def gamma_difference_residual(z, w, curve: CurveModel, N: int | None = None) -> float:
    """Max-entry residual between the matrix difference and the smooth-kernel matrix.

    The difference of the regularized operators at z and w equals the
    Nystrom matrix of the bounded kernel
    (e^(-sqrt(w) d) - e^(-sqrt(z) d))/(4 pi d), d = |gamma(t) - gamma(s)|,
    up to quadrature error.  On closed curves the comparison diagonal
    carries the Euler-Maclaurin correction for the |t-s| kink of the
    kernel, -h^2 (z-w)/(48 pi), so the residual reflects genuine Nystrom
    error rather than the known trapezoid defect of a kinked integrand.
    """
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("difference identity needs z != w")
    c = curve if N is None or N == curve.N else curve.resample(N)
    eps = c.L / 20.0
    a = build_gamma_tilde(z, c, eps).matrix
    b = build_gamma_tilde(w, c, eps).matrix
    d = np.linalg.norm(c.points[:, None, :] - c.points[None, :, :], axis=-1)
    k = c.h * difference_kernel(z, w, d)
    if c.closed:
        k += np.eye(c.N) * (-(c.h**2) * (z - w) / (48.0 * np.pi))
    return float(np.max(np.abs(a - b - k)))
