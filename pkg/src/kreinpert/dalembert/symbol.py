"""The Fourier multiplier of the boundary operator on a time-like line."""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad

from ..errors import BranchCutError, DegenerateInputError, QuadratureError
from ..spectral import as_z, sqrt_principal

FOUR_PI = 4.0 * np.pi


def gamma_symbol(h, z) -> complex:
    """sqrt(-h^2 + z) / 4 pi with Re sqrt > 0."""
    zeta = as_z(z) - float(h) ** 2
    return sqrt_principal(zeta) / FOUR_PI


def symbol_samples(h_grid, z) -> np.ndarray:
    """Vectorized gamma_symbol over a frequency grid."""
    z = as_z(z)
    zeta = z - np.asarray(h_grid, dtype=float) ** 2
    if np.any((zeta.imag == 0.0) & (zeta.real <= 0.0)):
        raise BranchCutError(f"z = {z} hits the branch cut at some grid frequency")
    return np.sqrt(zeta.astype(complex)) / FOUR_PI


def symbol_lower_bound(theta: float, h_grid, z) -> float:
    """min over the grid of |theta + symbol(h, z)|."""
    return float(np.min(np.abs(theta + symbol_samples(h_grid, z))))


def symbol_difference_check(h, z, w, cutoff: float = 1e3) -> float:
    """Residual of the defining radial-integral identity of the symbol.

    (z - w)/(2 pi^2) * int_0^inf r^2 dr / ((r^2 - h^2 + w)(r^2 - h^2 + z))
    must equal (sqrt(-h^2 + z) - sqrt(-h^2 + w)) / 4 pi.  The integral is
    evaluated adaptively up to a cutoff R with the analytic tail expansion
    1/R - (a+b)/3R^3 + ... appended.
    """
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("difference identity needs z != w")
    h = float(h)
    a = w - h * h
    b = z - h * h
    for zeta in (a, b):
        sqrt_principal(zeta)  # validates admissibility
    R = max(cutoff, 30.0 * np.sqrt(max(1.0, abs(a), abs(b))))

    def f(r):
        return r * r / ((r * r + a) * (r * r + b))

    # the integrand peaks where r^2 + Re(zeta) crosses 0; give quad the hint
    breaks = sorted(
        {np.sqrt(max(0.0, -zeta.real)) for zeta in (a, b)} | {0.0, R}
    )
    total = 0.0 + 0.0j
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        if hi <= lo:
            continue
        re, re_err = quad(lambda r: f(r).real, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=500)
        im, im_err = quad(lambda r: f(r).imag, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=500)
        if max(re_err, im_err) > 1e-8:
            raise QuadratureError(
                f"radial quadrature stalled on [{lo:.3g}, {hi:.3g}] "
                f"(abserr {max(re_err, im_err):.2e})"
            )
        total += re + 1j * im
    tail = (
        1.0 / R
        - (a + b) / (3.0 * R**3)
        + (a * a + a * b + b * b) / (5.0 * R**5)
        - (a**3 + a * a * b + a * b * b + b**3) / (7.0 * R**7)
    )
    lhs = (z - w) / (2.0 * np.pi**2) * (total + tail)
    rhs = (sqrt_principal(b) - sqrt_principal(a)) / FOUR_PI
    return float(abs(lhs - rhs))
