"""Probe-based verification of the structural identities of the construction.

Residuals are operator-norm estimates obtained from random unit probe
states: exact norms are unnecessary to separate the ~1e-12 (exact algebra)
and ~1e-6 (quadrature-limited) scales the identities live at.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError
from .spectral import as_z
from .system import KreinSystem, ThetaMatrix, gamma_theta, krein_resolvent_apply

DEFAULT_PROBES = 10


def _probes(system, n_probes, seed):
    rng = np.random.default_rng(seed)
    return [system.random_state(rng) for _ in range(n_probes)]


def verify_pseudo_resolvent(system: KreinSystem, theta: ThetaMatrix, z, w,
                            n_probes: int = DEFAULT_PROBES, seed: int = 0) -> float:
    """Residual of (z-w) R_Theta(w) R_Theta(z) - R_Theta(w) + R_Theta(z)."""
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("pseudo-resolvent identity needs z != w")
    worst = 0.0
    for phi in _probes(system, n_probes, seed):
        rz = krein_resolvent_apply(system, theta, z, phi)
        defect = (
            (z - w) * krein_resolvent_apply(system, theta, w, rz)
            - krein_resolvent_apply(system, theta, w, phi)
            + rz
        )
        worst = max(worst, system.norm(defect))
    return worst


def verify_adjoint(system: KreinSystem, theta: ThetaMatrix, z,
                   n_probes: int = DEFAULT_PROBES, seed: int = 0) -> float:
    """Residual of <R_Theta(z*) phi, psi> - <phi, R_Theta(z) psi> over probe pairs."""
    z = as_z(z)
    probes = _probes(system, n_probes, seed)
    worst = 0.0
    for i, phi in enumerate(probes):
        rphi = krein_resolvent_apply(system, theta, z.conjugate(), phi)
        for psi in probes[i:]:
            lhs = system.inner(rphi, psi)
            rhs = system.inner(phi, krein_resolvent_apply(system, theta, z, psi))
            worst = max(worst, abs(lhs - rhs))
    return worst


def verify_gbreve_difference(system: KreinSystem, z, w,
                             n_probes: int = DEFAULT_PROBES, seed: int = 0) -> float:
    """Residual of (z-w) Gbreve(w) R(z) - Gbreve(w) + Gbreve(z) on probe states."""
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("difference identity needs z != w")
    worst = 0.0
    for phi in _probes(system, n_probes, seed):
        vec = (
            (z - w) * system.gbreve(w, system.r_apply(z, phi))
            - system.gbreve(w, phi)
            + system.gbreve(z, phi)
        )
        worst = max(worst, float(np.linalg.norm(vec)))
    return worst


def verify_gamma_difference(system: KreinSystem, z, w) -> float:
    """Residual of Gamma(z) - Gamma(w) = (z-w) M, M_jk = <G(w*) e_j, G(z) e_k>.

    The matrix M is assembled from the system's own inner products of G
    columns; systems that provide ``inner_oracle`` (an independent
    quadrature route) have it used instead of ``inner``.
    """
    z, w = as_z(z), as_z(w)
    if z == w:
        raise DegenerateInputError("difference identity needs z != w")
    n = system.dim_boundary
    eye = np.eye(n)
    pair = getattr(system, "inner_oracle", system.inner)
    cols_w = [system.g_apply(w.conjugate(), eye[:, j]) for j in range(n)]
    cols_z = [system.g_apply(z, eye[:, k]) for k in range(n)]
    M = np.array([[pair(cw, cz) for cz in cols_z] for cw in cols_w])
    resid = system.gamma(z) - system.gamma(w) - (z - w) * M
    return float(np.linalg.norm(resid, 2))


@dataclass(frozen=True)
class ScanRecord:
    """Invertibility data for Gamma_Theta at one real spectral point."""

    lam: float
    gamma_lower: float          # smallest eigenvalue of the Hermitian part of Gamma(lam)
    smallest_abs_eigenvalue: float
    invertible: bool


def invertibility_scan(system: KreinSystem, theta: ThetaMatrix, lambda_grid) -> list[ScanRecord]:
    """Per-lambda invertibility of Theta + Gamma(lambda) along a real grid."""
    records = []
    for lam in np.asarray(lambda_grid, dtype=float):
        g = system.gamma(lam)
        g_lower = float(np.linalg.eigvalsh(0.5 * (g + g.conj().T))[0])
        gt = theta.entries + g
        eigs = np.linalg.eigvals(gt)
        sv = np.linalg.svd(gt, compute_uv=False)
        scale = sv[0] if sv[0] > 0 else 1.0
        records.append(
            ScanRecord(
                lam=float(lam),
                gamma_lower=g_lower,
                smallest_abs_eigenvalue=float(np.min(np.abs(eigs))),
                invertible=bool(sv[-1] > 1e-10 * scale),
            )
        )
    return records


def semibound_certificate(system: KreinSystem, theta: ThetaMatrix, lambda0: float,
                          lambda_grid) -> tuple[bool, float]:
    """Sampled lower-bound certificate: gamma(Gamma(lam)) + gamma(Theta) > 0.

    A True result supports (on the sampled grid only; this is not a proof)
    the semiboundedness bound inf spec >= -lambda0 of the perturbed
    operator.  Returns (certified, worst margin over the grid).
    """
    grid = np.asarray(lambda_grid, dtype=float)
    grid = grid[grid >= lambda0]
    theta_lower = float(np.linalg.eigvalsh(theta.entries)[0])
    worst = np.inf
    for lam in grid:
        g = system.gamma(lam)
        g_lower = float(np.linalg.eigvalsh(0.5 * (g + g.conj().T))[0])
        worst = min(worst, g_lower + theta_lower)
    return bool(worst > 0.0), float(worst)
