"""Abstract Krein system interface and the resolvent of the perturbed operator.

A KreinSystem bundles the four maps attached to a free operator A and a
trace tau on a boundary space C^n:

    R(z)  = (-A + z)^(-1)           (free resolvent, acts on states)
    Gbreve(z) = tau . R(z)          (states -> C^n)
    G(z)  = Gbreve(z*)^dagger       (C^n -> states, Hilbert adjoint)
    Gamma(z)                        (n x n matrix with Gamma(z) - Gamma(w)
                                     = (z - w) Gbreve(w) G(z))

Every concrete model (finite testbed, point interactions, ...) implements
this interface; the verification routines in ``verify`` are generic over it.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, GammaSingularError
from .spectral import as_z

#: condition-number cap for boundary solves (double-precision headroom)
COND_CAP = 1e12


@dataclass(frozen=True)
class ThetaMatrix:
    """Hermitian coupling matrix labeling a self-adjoint extension."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.atleast_2d(np.asarray(self.entries, dtype=complex))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ContractViolation(f"Theta must be square, got shape {m.shape}")
        if not np.array_equal(m, m.conj().T):
            raise ContractViolation("Theta must be Hermitian as stored")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def scalar(cls, alpha: float, n: int = 1) -> "ThetaMatrix":
        return cls(float(alpha) * np.eye(n))


class KreinSystem(abc.ABC):
    """Abstract bundle R(z), Gbreve(z), G(z), Gamma(z) over boundary space C^n."""

    @property
    @abc.abstractmethod
    def dim_boundary(self) -> int:
        """Dimension n of the boundary space."""

    @abc.abstractmethod
    def r_apply(self, z, phi):
        """Free resolvent R(z) applied to the state phi."""

    @abc.abstractmethod
    def gbreve(self, z, phi) -> np.ndarray:
        """Gbreve(z) phi = tau R(z) phi, a vector in C^n."""

    @abc.abstractmethod
    def g_apply(self, z, xi):
        """G(z) xi, a state, for xi in C^n."""

    @abc.abstractmethod
    def gamma(self, z) -> np.ndarray:
        """Gamma(z) as an n x n matrix."""

    # -- state-space utilities used by the probe-based verifiers ---------

    @abc.abstractmethod
    def random_state(self, rng):
        """A random unit-norm probe state."""

    @abc.abstractmethod
    def inner(self, a, b) -> complex:
        """Inner product <a, b>, conjugate-linear in the first slot."""

    def norm(self, a) -> float:
        return float(np.sqrt(abs(self.inner(a, a).real)))

    def in_resolvent_set(self, z) -> bool:
        """Whether z is safely inside the free operator's resolvent set."""
        return True


def gamma_theta(system: KreinSystem, theta: ThetaMatrix, z) -> np.ndarray:
    """Gamma_Theta(z) = Theta + Gamma(z)."""
    return theta.entries + system.gamma(z)


def solve_boundary(system: KreinSystem, theta: ThetaMatrix, z, rhs: np.ndarray) -> np.ndarray:
    """Solve (Theta + Gamma(z)) xi = rhs, guarding against near-singularity."""
    gt = gamma_theta(system, theta, z)
    sv = np.linalg.svd(gt, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] == 0.0 or sv[0] / sv[-1] > COND_CAP:
        raise GammaSingularError(
            f"Theta + Gamma(z) numerically singular at z={as_z(z)}"
            f" (smallest singular value {sv[-1]:.3e})",
            smallest_singular_value=float(sv[-1]),
        )
    return np.linalg.solve(gt, rhs)


def krein_resolvent_apply(system: KreinSystem, theta: ThetaMatrix, z, phi):
    """Resolvent of the perturbed operator applied to phi.

    R_Theta(z) phi = R(z) phi + G(z) xi  with  (Theta + Gamma(z)) xi = Gbreve(z) phi.
    """
    z = as_z(z)
    xi = solve_boundary(system, theta, z, system.gbreve(z, phi))
    return system.r_apply(z, phi) + system.g_apply(z, xi)


def gamma_hat(system: KreinSystem, z, z0) -> np.ndarray:
    """The bounded solution of the Gamma difference identity anchored at z0.

    Gamma_hat(z) = tau ((G(z0) + G(z0*))/2 - G(z)), assembled column by
    column through Gbreve/G using the first-resolvent-identity reduction
    tau (G(w) - G(z)) = (z - w) Gbreve(w) G(z), which never needs tau itself.
    """
    from .errors import ResolventSetError

    z = as_z(z)
    z0 = complex(z0)
    for p in (z, z0, z0.conjugate()):
        if not system.in_resolvent_set(p):
            raise ResolventSetError(f"{p} is a spectral point of the free operator")
    n = system.dim_boundary
    out = np.empty((n, n), dtype=complex)
    eye = np.eye(n)
    for k in range(n):
        col_state = system.g_apply(z, eye[:, k])
        col = 0.5 * (
            (z - z0) * system.gbreve(z0, col_state)
            + (z - z0.conjugate()) * system.gbreve(z0.conjugate(), col_state)
        )
        out[:, k] = col
    return out
