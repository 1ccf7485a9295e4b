"""Bound states of the curve-perturbed Laplacian with scalar coupling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ContractViolation, IntervalError
from .model import CurveModel
from .nystrom import build_gamma_tilde

_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class CurveBoundState:
    """Zero of the smallest eigenvalue curve of beta*I + Gamma(lambda)."""

    lam_star: float
    vector: np.ndarray  # eigenvector samples at the curve nodes


def _matrix(curve, beta, lam, eps):
    m = build_gamma_tilde(lam, curve, eps).matrix
    m = 0.5 * (m + m.conj().T)  # strip quadrature-level asymmetry
    return beta * np.eye(curve.N) + m.real


def _smallest_eig(curve, beta, lam, eps):
    return float(np.linalg.eigvalsh(_matrix(curve, beta, lam, eps))[0])


def curve_bound_states(curve: CurveModel, beta: float, lam_interval,
                       resolution: int = 32) -> list[CurveBoundState]:
    """Zeros of the smallest eigenvalue of beta*I + Gamma(lambda) on the interval.

    Same strategy as the point model: the matrix is Hermitian for real
    lambda > 0, so the smallest eigenvalue is tracked on a log-spaced grid
    and each sign change is refined by bisection.
    """
    a, b = float(lam_interval[0]), float(lam_interval[1])
    if a <= 0.0 or b <= a:
        raise IntervalError(f"need 0 < a < b, got ({a}, {b})")
    if resolution < 16:
        raise IntervalError(f"resolution must be >= 16, got {resolution}")
    eps = curve.L / 20.0
    grid = np.geomspace(a, b, resolution)
    mu = np.array([_smallest_eig(curve, beta, lam, eps) for lam in grid])
    scale = max(np.max(np.abs(mu)), abs(beta), 1e-300)

    states = []
    for i in np.flatnonzero(np.sign(mu[:-1]) * np.sign(mu[1:]) < 0):
        lo, hi = grid[i], grid[i + 1]
        f_lo = mu[i]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            f_mid = _smallest_eig(curve, beta, mid, eps)
            if abs(f_mid) < _ROOT_TOL * scale:
                lo = hi = mid
                break
            if np.sign(f_mid) == np.sign(f_lo):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
            if hi - lo < 1e-13 * hi:
                break
        lam_star = 0.5 * (lo + hi)
        m = _matrix(curve, beta, lam_star, eps)
        evals, evecs = np.linalg.eigh(m)
        vec = evecs[:, 0] / np.linalg.norm(evecs[:, 0])
        if abs(evals[0]) > 1e-6 * scale:
            raise ContractViolation(
                f"bisection converged to lambda={lam_star:.6g} but smallest "
                f"eigenvalue is {evals[0]:.3e}"
            )
        vec.setflags(write=False)
        states.append(CurveBoundState(lam_star=float(lam_star), vector=vec))
    return states


def decay_sum_estimate(curve: CurveModel, lam: float) -> float:
    """max over nodes of the quadrature of e^(-lam |gamma(t) - gamma(s)|) ds.

    Finiteness of this quantity (uniformly in truncation length) is the
    admissibility condition for non-compact curves; for compact curves it
    is bounded by the curve length.
    """
    if lam <= 0.0:
        raise IntervalError("decay rate must be positive")
    d = np.linalg.norm(curve.points[:, None, :] - curve.points[None, :, :], axis=-1)
    return float(np.max(curve.h * np.sum(np.exp(-lam * d), axis=1)))
