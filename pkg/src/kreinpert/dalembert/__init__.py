"""Singular perturbation of the d'Alembertian on a time-like straight line."""

from .boost import boost_covariance_check, boost_matrix, expx_e1
from .config import Gaussian1D, Gaussian3D, LineConfig, MultiplierGrid
from .identities import adjoint_pairing_residual, pseudo_resolvent_residual
from .separable import (
    free_resolvent_at,
    free_resolvent_samples,
    gbreve_separable,
    grid_fft,
    grid_ifft,
    line_resolvent_separable,
    radial_profile,
)
from .symbol import (
    gamma_symbol,
    symbol_difference_check,
    symbol_lower_bound,
    symbol_samples,
)

__all__ = [
    "Gaussian1D",
    "Gaussian3D",
    "LineConfig",
    "MultiplierGrid",
    "boost_covariance_check",
    "boost_matrix",
    "expx_e1",
    "free_resolvent_at",
    "free_resolvent_samples",
    "gamma_symbol",
    "gbreve_separable",
    "grid_fft",
    "grid_ifft",
    "line_resolvent_separable",
    "radial_profile",
    "symbol_difference_check",
    "symbol_lower_bound",
    "symbol_samples",
]
