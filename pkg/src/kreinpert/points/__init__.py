"""Finitely many 3D point interactions."""

from .config import PointConfig
from .gaussian import free_resolvent_gaussian, gbreve_gaussian
from .kernels import (
    gamma_derivative_analytic,
    gamma_derivative_check,
    gamma_matrix,
    green_kernel,
    resolvent_kernel,
)
from .spectra import BoundState, bound_states, eigenfunction_eval, eigenfunction_fd_residual
from .states import FourierRadialState, radial_integral
from .system import PointKreinSystem

__all__ = [
    "PointConfig",
    "BoundState",
    "FourierRadialState",
    "PointKreinSystem",
    "bound_states",
    "eigenfunction_eval",
    "eigenfunction_fd_residual",
    "free_resolvent_gaussian",
    "gamma_derivative_analytic",
    "gamma_derivative_check",
    "gamma_matrix",
    "gbreve_gaussian",
    "green_kernel",
    "radial_integral",
    "resolvent_kernel",
]
