"""Exception and warning types shared by all model modules."""


class KreinpertError(Exception):
    """Base class for all library errors."""


class BranchCutError(KreinpertError):
    """Spectral parameter lies on the branch cut (-inf, 0] of the principal root."""


class DimensionError(KreinpertError):
    """Incompatible or invalid dimensions."""


class ResolventSetError(KreinpertError):
    """Spectral parameter is (numerically) a spectral point of the free operator."""


class GammaSingularError(KreinpertError):
    """The boundary matrix Theta + Gamma(z) is numerically singular.

    Carries ``smallest_singular_value`` so callers can report how close to
    singular the solve was.
    """

    def __init__(self, message, smallest_singular_value=None):
        super().__init__(message)
        self.smallest_singular_value = smallest_singular_value


class DegenerateInputError(KreinpertError):
    """Two spectral parameters coincide where a difference identity needs z != w."""


class ContractViolation(KreinpertError):
    """A domain-type invariant was violated at construction time."""


class DomainError(KreinpertError):
    """Evaluation point outside the admissible domain (e.g. at a kernel singularity)."""


class IntervalError(KreinpertError):
    """Invalid search interval."""


class QuadratureError(KreinpertError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class EpsilonRangeError(KreinpertError):
    """Regularization parameter epsilon outside (0, L/4)."""


class SelfIntersectionError(KreinpertError):
    """Curve nodes violate the non-self-intersection bound."""


class ResolutionWarning(UserWarning):
    """Eigenvalue-curve ordering was ambiguous on the search grid."""


class AliasWarning(UserWarning):
    """Fourier grid padding rule violated; periodization error may exceed budget."""
