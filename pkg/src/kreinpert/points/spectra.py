"""Bound states of the point-interaction model.

On the positive real axis the boundary matrix Theta + Gamma(lambda) is
Hermitian, so its eigenvalue curves mu_k(lambda) are real; bound states are
located by bracketing sign changes of each curve on a grid and refining by
bisection.  This avoids complex determinant root-finding entirely.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .._kernels import fd_residual_norms, point_sum
from ..errors import ContractViolation, IntervalError, ResolutionWarning
from .config import PointConfig
from .kernels import gamma_matrix, green_kernel

#: |mu_k| refinement target, relative to the matrix scale
_ROOT_TOL = 1e-12

#: relative clustering tolerance for degenerate roots
_CLUSTER_TOL = 1e-9


@dataclass(frozen=True)
class BoundState:
    """Eigenvalue z_star > 0 of the perturbed Laplacian with its kernel vector."""

    z_star: float
    coefficients: np.ndarray
    multiplicity: int


def _gamma_theta_real(config, lam):
    g = gamma_matrix(lam, config)
    return 0.5 * (g + g.conj().T)  # strip ~1e-16 asymmetry so eigvalsh is exact


def _eigencurves(config, lam):
    return np.linalg.eigvalsh(_gamma_theta_real(config, lam))


def bound_states(config: PointConfig, lam_interval, resolution: int = 64) -> list[BoundState]:
    """All zeros of the eigenvalue curves of Theta + Gamma(lambda) in the interval.

    The grid has ``resolution`` points (log-spaced); each sign change of a
    sorted-eigenvalue curve is refined by bisection to |mu| < 1e-12 x scale.
    Roots closer than 1e-9 (relative) are merged into one state whose
    multiplicity counts the merged curves.
    """
    a, b = float(lam_interval[0]), float(lam_interval[1])
    if a <= 0.0 or b <= a:
        raise IntervalError(f"need 0 < a < b, got ({a}, {b})")
    if resolution < 16:
        raise IntervalError(f"resolution must be >= 16, got {resolution}")

    grid = np.geomspace(a, b, resolution)
    curves = np.array([_eigencurves(config, lam) for lam in grid])
    scale = max(np.max(np.abs(curves)), 1e-300)
    # sorted-order tracking is only safe when curves stay separated
    gaps = np.diff(curves, axis=1)
    if config.n > 1 and np.any(np.abs(gaps) < 1e-9 * scale):
        warnings.warn(
            "eigenvalue curves nearly cross on the search grid; "
            "sorted-order tracking may mislabel branches",
            ResolutionWarning,
            stacklevel=2,
        )

    roots = []
    for k in range(config.n):
        mu = curves[:, k]
        for i in np.flatnonzero(np.sign(mu[:-1]) * np.sign(mu[1:]) < 0):
            lo, hi = grid[i], grid[i + 1]
            f_lo = mu[i]
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                f_mid = _eigencurves(config, mid)[k]
                if abs(f_mid) < _ROOT_TOL * scale:
                    lo = hi = mid
                    break
                if np.sign(f_mid) == np.sign(f_lo):
                    lo, f_lo = mid, f_mid
                else:
                    hi = mid
                if hi - lo < 1e-16 * hi:
                    break
            roots.append(0.5 * (lo + hi))
        # a curve vanishing at a grid point exactly is a root too
        for i in np.flatnonzero(np.abs(mu) < _ROOT_TOL * scale):
            roots.append(grid[i])

    roots.sort()
    states: list[BoundState] = []
    i = 0
    while i < len(roots):
        j = i + 1
        while j < len(roots) and roots[j] - roots[i] <= _CLUSTER_TOL * roots[j]:
            j += 1
        z_star = float(np.mean(roots[i:j]))
        gt = _gamma_theta_real(config, z_star)
        evals, evecs = np.linalg.eigh(gt)
        kmin = int(np.argmin(np.abs(evals)))
        coeffs = evecs[:, kmin]
        coeffs = coeffs / np.linalg.norm(coeffs)
        resid = np.linalg.norm(gt @ coeffs)
        if resid > 1e-8:
            raise ContractViolation(
                f"kernel vector residual {resid:.3e} at z*={z_star:.12g}"
            )
        coeffs.setflags(write=False)
        states.append(BoundState(z_star=z_star, coefficients=coeffs, multiplicity=j - i))
        i = j
    return states


def eigenfunction_eval(state: BoundState, config: PointConfig, x) -> complex:
    """psi(x) = sum_j c_j G_{z*}(x - y_j)."""
    return complex(
        sum(
            c * green_kernel(state.z_star, np.asarray(x, dtype=float) - y)
            for c, y in zip(state.coefficients, config.centers)
        )
    )


def eigenfunction_fd_residual(state: BoundState, config: PointConfig,
                              spacing: float = 0.01, exclusion: float = 0.1,
                              pad: float = 0.55) -> float:
    """Relative residual ||(-Lap_h + z*) psi|| / ||psi|| on a uniform 3D grid.

    The grid covers the centers' bounding box padded by ``pad`` and is
    offset by half a spacing so no node coincides with a center; nodes
    within ``exclusion`` of any center are masked out.  Uses an 8th-order
    stencil so the discretization error stays well below the 1e-3 scale.
    """
    s = np.sqrt(state.z_star)
    lo = config.centers.min(axis=0) - pad
    hi = config.centers.max(axis=0) + pad
    axes = [np.arange(lo[i] + 0.5 * spacing, hi[i], spacing) for i in range(3)]
    shape = tuple(len(ax) for ax in axes)

    psi = np.empty(shape, dtype=complex)
    mask = np.empty(shape, dtype=bool)
    yy, zz = np.meshgrid(axes[1], axes[2], indexing="ij")
    plane = np.column_stack([np.empty(yy.size), yy.ravel(), zz.ravel()])
    for ix, xval in enumerate(axes[0]):
        plane[:, 0] = xval
        psi[ix] = point_sum(s, config.centers, state.coefficients, plane).reshape(shape[1:])
        dmin = np.min(
            np.linalg.norm(plane[:, None, :] - config.centers[None, :, :], axis=-1),
            axis=1,
        )
        mask[ix] = (dmin > exclusion).reshape(shape[1:])

    res_norm, psi_norm = fd_residual_norms(psi, spacing, state.z_star, mask)
    return res_norm / psi_norm
