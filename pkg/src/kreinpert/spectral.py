"""Spectral parameters and the principal square-root branch.

All Laplacian-type models use the branch of sqrt(z) with positive real part,
defined off the cut (-inf, 0].
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import BranchCutError


def sqrt_principal(z: complex) -> complex:
    """Principal square root with Re(sqrt(z)) > 0.

    Raises BranchCutError for z on the closed negative real axis, where the
    models' essential spectrum sits.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise BranchCutError(f"z={z} lies on the branch cut (-inf, 0]")
    s = cmath.sqrt(z)
    # cmath.sqrt returns Re >= 0; Re == 0 only happens on the cut
    return s


@dataclass(frozen=True)
class SpectralPoint:
    """A spectral parameter z off the cut, carrying its principal root."""

    z: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        s = sqrt_principal(self.z)
        object.__setattr__(self, "root", s)

    @property
    def conjugate(self) -> "SpectralPoint":
        return SpectralPoint(self.z.conjugate())


def as_z(z) -> complex:
    """Accept a SpectralPoint or a bare number, return the complex value."""
    if isinstance(z, SpectralPoint):
        return z.z
    return complex(z)
