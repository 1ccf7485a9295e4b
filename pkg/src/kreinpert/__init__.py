"""Krein-type resolvent formulas for singular perturbations of self-adjoint operators."""

from ._kernels import BACKEND as kernel_backend
from .errors import (
    AliasWarning,
    BranchCutError,
    ContractViolation,
    DegenerateInputError,
    DimensionError,
    DomainError,
    EpsilonRangeError,
    GammaSingularError,
    IntervalError,
    KreinpertError,
    QuadratureError,
    ResolutionWarning,
    ResolventSetError,
    SelfIntersectionError,
)
from .spectral import SpectralPoint, sqrt_principal
from .system import KreinSystem, ThetaMatrix, gamma_hat, krein_resolvent_apply
from .testbed import FiniteTestbed, make_testbed

__version__ = "0.1.0"
