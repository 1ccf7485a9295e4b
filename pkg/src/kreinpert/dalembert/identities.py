"""Structural identity checks for the line-perturbed resolvent.

In the mixed representation (Fourier in time only) the v = 0 perturbed
resolvent acts frequency-wise as the 3D resolvent of a single point
interaction at the origin with coupling theta, at shifted spectral
parameter z - h^2.  Compositions and adjoints of the line resolvent
therefore reduce per frequency to the 3D state algebra, which is how the
checks below evaluate them; the time grid only reassembles the results.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateInputError
from ..points.states import FourierRadialState
from ..points.system import PointKreinSystem
from ..spectral import as_z
from ..system import ThetaMatrix, krein_resolvent_apply
from .config import Gaussian1D, Gaussian3D, LineConfig, MultiplierGrid

#: |phi^(h)| below which a frequency's contribution is negligible
_SPECTRUM_FLOOR = 1e-13


def _system(theta):
    return PointKreinSystem([[0.0, 0.0, 0.0]]), ThetaMatrix.scalar(theta)


def _active_frequencies(grid: MultiplierGrid, *phis):
    keep = np.zeros(grid.n, dtype=bool)
    for phi in phis:
        keep |= np.abs(phi.hat(grid.h)) > _SPECTRUM_FLOOR
    return grid.h[keep]


def pseudo_resolvent_residual(z, w, config: LineConfig, phi: Gaussian1D,
                              varphi: Gaussian3D, grid: MultiplierGrid, x) -> float:
    """Sup-norm estimate of (z-w) R(w) R(z) Phi - R(w) Phi + R(z) Phi at spatial x.

    The defect's time samples are the inverse transform of
    phi^(h) * d_h(x), with d_h the same defect for the 3D point system at
    the shifted parameters; frequencies with negligible phi^ are skipped.
    """
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("pseudo-resolvent identity needs z != w")
    system, theta = _system(config.theta)
    x = np.asarray(x, dtype=float)
    g3 = FourierRadialState.gaussian(varphi.center, varphi.width)
    hs = _active_frequencies(grid, phi)
    dh = 2.0 * np.pi / grid.length
    total = 0.0
    for h in hs:
        zz, ww = z - h * h, w - h * h
        rz = krein_resolvent_apply(system, theta, zz, g3)
        defect = (
            (z - w) * krein_resolvent_apply(system, theta, ww, rz)
            - krein_resolvent_apply(system, theta, ww, g3)
            + rz
        )
        total += abs(phi.hat(h)) * abs(defect.eval_at(x)) * dh / np.sqrt(2.0 * np.pi)
    return float(total)


def adjoint_pairing_residual(z, config: LineConfig, phi1: Gaussian1D, varphi1: Gaussian3D,
                             phi2: Gaussian1D, varphi2: Gaussian3D,
                             grid: MultiplierGrid) -> float:
    """Residual of <R(z*) Phi1, Phi2> - <Phi1, R(z) Phi2> for separable Gaussians."""
    z = as_z(z)
    system, theta = _system(config.theta)
    g1 = FourierRadialState.gaussian(varphi1.center, varphi1.width)
    g2 = FourierRadialState.gaussian(varphi2.center, varphi2.width)
    hs = _active_frequencies(grid, phi1, phi2)
    dh = 2.0 * np.pi / grid.length
    lhs = 0.0 + 0.0j
    rhs = 0.0 + 0.0j
    for h in hs:
        weight = np.conj(phi1.hat(h)) * phi2.hat(h) * dh
        zz = z - h * h
        lhs += weight * system.inner(
            krein_resolvent_apply(system, theta, zz.conjugate(), g1), g2
        )
        rhs += weight * system.inner(g1, krein_resolvent_apply(system, theta, zz, g2))
    return float(abs(lhs - rhs))
