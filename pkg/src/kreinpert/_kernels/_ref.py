"""Pure-numpy reference implementation of the hot kernels."""

import numpy as np

FOUR_PI = 4.0 * np.pi

# 8th-order central second-derivative stencil, coefficients for offsets -4..4
FD8 = np.array(
    [-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560]
)
FD_MARGIN = 4


def yukawa_matrix(s, X, Y):
    """Pairwise kernel exp(-s*d)/(4*pi*d), d = |X_i - Y_j|.

    Entries with d == 0 are set to 0; callers that need the singular limit
    must handle coincident points themselves.
    """
    X = np.asarray(X, dtype=float).reshape(-1, 3)
    Y = np.asarray(Y, dtype=float).reshape(-1, 3)
    d = np.linalg.norm(X[:, None, :] - Y[None, :, :], axis=-1)
    out = np.zeros(d.shape, dtype=complex)
    nz = d > 0.0
    out[nz] = np.exp(-s * d[nz]) / (FOUR_PI * d[nz])
    return out


def point_sum(s, centers, coeffs, X):
    """Sum_j coeffs[j] * exp(-s*|x-y_j|)/(4*pi*|x-y_j|) for each row x of X."""
    X = np.asarray(X, dtype=float).reshape(-1, 3)
    centers = np.asarray(centers, dtype=float).reshape(-1, 3)
    coeffs = np.asarray(coeffs, dtype=complex).ravel()
    out = np.zeros(len(X), dtype=complex)
    for y, c in zip(centers, coeffs):
        d = np.linalg.norm(X - y, axis=-1)
        out += c * np.exp(-s * d) / (FOUR_PI * d)
    return out


def fd_residual_norms(psi, h, z, mask):
    """Masked L2 norms of (-Laplacian_h + z) psi and of psi.

    psi: complex 3D array of samples on a uniform grid with spacing h.
    mask: uint8/bool array, nonzero where the point counts; points within
    FD_MARGIN of the array boundary are ignored regardless of the mask.

    Returns (residual_norm, psi_norm), both including the h^{3/2} volume factor.
    """
    psi = np.asarray(psi)
    mask = np.asarray(mask).astype(bool)
    m = FD_MARGIN
    lap = np.zeros_like(psi[m:-m, m:-m, m:-m])
    core = psi[m:-m, m:-m, m:-m]
    n0, n1, n2 = psi.shape
    for k, c in zip(range(-m, m + 1), FD8):
        lap += c * psi[m + k : n0 - m + k, m:-m, m:-m]
        lap += c * psi[m:-m, m + k : n1 - m + k, m:-m]
        lap += c * psi[m:-m, m:-m, m + k : n2 - m + k]
    res = -lap / h**2 + z * core
    inner = mask[m:-m, m:-m, m:-m]
    w = h**1.5
    res_norm = w * np.sqrt(np.sum(np.abs(res[inner]) ** 2))
    psi_norm = w * np.sqrt(np.sum(np.abs(core[inner]) ** 2))
    return float(res_norm), float(psi_norm)
