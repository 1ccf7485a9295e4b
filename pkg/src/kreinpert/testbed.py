"""Finite-dimensional matrix testbed implementing the KreinSystem interface.

The free operator is an m x m Hermitian matrix A with spectrum in [-1, 1],
the trace is a full-row-rank n x m matrix tau, and Gamma(z) is the anchored
solution gamma_hat with real anchor z0 = 2 (so Gamma(z0) = 0 and the
invertibility set is trivially nonempty for invertible Theta).  Every
identity of the abstract construction can be checked here against direct
matrix arithmetic at ~1e-14.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError
from .spectral import as_z
from .system import KreinSystem, gamma_hat

DEFAULT_Z0 = 2.0

#: minimum distance from the spectrum for "inside the resolvent set"
_RESOLVENT_TOL = 1e-8


class FiniteTestbed(KreinSystem):
    """Concrete KreinSystem built from matrices (A, tau)."""

    def __init__(self, A, tau, z0=DEFAULT_Z0):
        A = np.asarray(A, dtype=complex)
        tau = np.atleast_2d(np.asarray(tau, dtype=complex))
        m = A.shape[0]
        n = tau.shape[0]
        if A.shape != (m, m) or not np.allclose(A, A.conj().T, atol=1e-13):
            raise DimensionError("A must be a square Hermitian matrix")
        if tau.shape[1] != m or n >= m:
            raise DimensionError(f"tau must be n x m with n < m, got {tau.shape}")
        if np.linalg.matrix_rank(tau) != n:
            raise DimensionError("tau must have full row rank")
        self.A = A
        self.tau = tau
        self.z0 = float(z0)
        self.eigenvalues = np.linalg.eigvalsh(A)
        if np.min(np.abs(self.eigenvalues - self.z0)) < _RESOLVENT_TOL:
            raise DimensionError("z0 must lie outside the spectrum of A")

    # -- KreinSystem interface -------------------------------------------

    @property
    def dim_boundary(self):
        return self.tau.shape[0]

    def in_resolvent_set(self, z):
        return bool(np.min(np.abs(self.eigenvalues - as_z(z))) > _RESOLVENT_TOL)

    def r_matrix(self, z):
        """R(z) = (-A + z)^(-1) as a dense matrix."""
        m = self.A.shape[0]
        return np.linalg.inv(-self.A + as_z(z) * np.eye(m))

    def r_apply(self, z, phi):
        m = self.A.shape[0]
        return np.linalg.solve(-self.A + as_z(z) * np.eye(m), phi)

    def gbreve(self, z, phi):
        return self.tau @ self.r_apply(z, phi)

    def g_apply(self, z, xi):
        # G(z) = (tau R(z*))^dagger = R(z) tau^dagger
        return self.r_apply(z, self.tau.conj().T @ np.asarray(xi, dtype=complex))

    def gamma(self, z):
        return gamma_hat(self, z, self.z0)

    def random_state(self, rng):
        m = self.A.shape[0]
        v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        return v / np.linalg.norm(v)

    def inner(self, a, b):
        return complex(np.vdot(a, b))


def make_testbed(m: int, n: int, seed: int) -> FiniteTestbed:
    """Deterministic-from-seed testbed.

    A has eigenvalues uniform in [-1, 1] in a random unitary frame; tau is a
    complex Gaussian n x m matrix with unit-norm rows; z0 = 2.
    """
    if not (1 <= n < m <= 200):
        raise DimensionError(f"need 1 <= n < m <= 200, got (m={m}, n={n})")
    rng = np.random.default_rng(np.uint64(seed))
    evals = rng.uniform(-1.0, 1.0, size=m)
    q, _ = np.linalg.qr(rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))
    A = (q * evals) @ q.conj().T
    A = 0.5 * (A + A.conj().T)
    tau = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    tau /= np.linalg.norm(tau, axis=1, keepdims=True)
    return FiniteTestbed(A, tau, z0=DEFAULT_Z0)
