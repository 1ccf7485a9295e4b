# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot kernels (see _ref.py for the contract)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

cdef double FOUR_PI = 4.0 * 3.14159265358979323846

cdef double[9] FD8_C
FD8_C[0] = -1.0 / 560.0
FD8_C[1] = 8.0 / 315.0
FD8_C[2] = -1.0 / 5.0
FD8_C[3] = 8.0 / 5.0
FD8_C[4] = -205.0 / 72.0
FD8_C[5] = 8.0 / 5.0
FD8_C[6] = -1.0 / 5.0
FD8_C[7] = 8.0 / 315.0
FD8_C[8] = -1.0 / 560.0

FD_MARGIN = 4

cdef extern from "complex.h":
    double complex cexp(double complex) nogil
    double cabs(double complex) nogil


def yukawa_matrix(s, X, Y):
    cdef double complex sc = s
    cdef const double[:, ::1] Xv = np.ascontiguousarray(np.asarray(X, dtype=float).reshape(-1, 3))
    cdef const double[:, ::1] Yv = np.ascontiguousarray(np.asarray(Y, dtype=float).reshape(-1, 3))
    cdef Py_ssize_t nx = Xv.shape[0], ny = Yv.shape[0], i, j
    out = np.zeros((nx, ny), dtype=complex)
    cdef double complex[:, ::1] ov = out
    cdef double dx, dy, dz, d
    with nogil:
        for i in range(nx):
            for j in range(ny):
                dx = Xv[i, 0] - Yv[j, 0]
                dy = Xv[i, 1] - Yv[j, 1]
                dz = Xv[i, 2] - Yv[j, 2]
                d = sqrt(dx * dx + dy * dy + dz * dz)
                if d > 0.0:
                    ov[i, j] = cexp(-sc * d) / (FOUR_PI * d)
    return out


def point_sum(s, centers, coeffs, X):
    cdef double complex sc = s
    cdef const double[:, ::1] Cv = np.ascontiguousarray(np.asarray(centers, dtype=float).reshape(-1, 3))
    cdef const double complex[::1] av = np.ascontiguousarray(np.asarray(coeffs, dtype=complex).ravel())
    cdef const double[:, ::1] Xv = np.ascontiguousarray(np.asarray(X, dtype=float).reshape(-1, 3))
    cdef Py_ssize_t n = Cv.shape[0], m = Xv.shape[0], i, j
    out = np.zeros(m, dtype=complex)
    cdef double complex[::1] ov = out
    cdef double dx, dy, dz, d
    with nogil:
        for i in range(m):
            for j in range(n):
                dx = Xv[i, 0] - Cv[j, 0]
                dy = Xv[i, 1] - Cv[j, 1]
                dz = Xv[i, 2] - Cv[j, 2]
                d = sqrt(dx * dx + dy * dy + dz * dz)
                ov[i] = ov[i] + av[j] * cexp(-sc * d) / (FOUR_PI * d)
    return out


def fd_residual_norms(psi, h, z, mask):
    cdef double complex zc = z
    cdef double hh = h
    cdef const double complex[:, :, ::1] pv = np.ascontiguousarray(np.asarray(psi, dtype=complex))
    cdef const cnp.uint8_t[:, :, ::1] mv = np.ascontiguousarray(np.asarray(mask, dtype=np.uint8))
    cdef Py_ssize_t n0 = pv.shape[0], n1 = pv.shape[1], n2 = pv.shape[2]
    cdef Py_ssize_t i, j, k, o
    cdef double complex lap, r
    cdef double res2 = 0.0, psi2 = 0.0, inv_h2 = 1.0 / (hh * hh)
    with nogil:
        for i in range(4, n0 - 4):
            for j in range(4, n1 - 4):
                for k in range(4, n2 - 4):
                    if mv[i, j, k] == 0:
                        continue
                    lap = 0
                    for o in range(-4, 5):
                        lap = lap + FD8_C[o + 4] * (
                            pv[i + o, j, k] + pv[i, j + o, k] + pv[i, j, k + o]
                        )
                    r = -lap * inv_h2 + zc * pv[i, j, k]
                    res2 += cabs(r) * cabs(r)
                    psi2 += cabs(pv[i, j, k]) * cabs(pv[i, j, k])
    cdef double w = hh * hh * hh
    return sqrt(res2 * w), sqrt(psi2 * w)
