"""Curve-supported singular perturbations of the 3D Laplacian."""

from .model import CurveModel
from .nystrom import (
    GammaNystrom,
    build_gamma_tilde,
    diagonal_scalar,
    difference_kernel,
    gamma_difference_residual,
)
from .spectra import CurveBoundState, decay_sum_estimate, curve_bound_states

__all__ = [
    "CurveModel",
    "CurveBoundState",
    "GammaNystrom",
    "build_gamma_tilde",
    "decay_sum_estimate",
    "curve_bound_states",
    "diagonal_scalar",
    "difference_kernel",
    "gamma_difference_residual",
]
