# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled core for the O(n^2) direct-quadrature loops.
# Must stay numerically identical to _np_core (same formulas, same branch cuts).

import numpy as np

cimport cython
from libc.math cimport M_PI, exp, expm1, fabs

NAME = "compiled"

ctypedef double complex cplx


cdef inline double _sech(double z) noexcept nogil:
    cdef double e = exp(-fabs(z))
    return 2.0 * e / (1.0 + e * e)


cdef inline double _csch(double z) noexcept nogil:
    cdef double az = fabs(z)
    cdef double v = 2.0 * exp(-az) / (-expm1(-2.0 * az))
    return v if z > 0.0 else -v


cdef inline double _smooth_part(double omega, double u) noexcept nogil:
    # smooth remainder of the sinh kernel after removing 1/(pi u)
    cdef double z = omega * u
    if fabs(z) < 1e-3:
        return (omega / M_PI) * (-z / 6.0 + 7.0 * z * z * z / 360.0)
    return (omega / M_PI) * (_csch(z) - 1.0 / z)


def conv_cosh_direct(double[::1] eval_t, double t0, double delta, cplx[::1] x, double omega):
    cdef Py_ssize_t ne = eval_t.shape[0]
    cdef Py_ssize_t n = x.shape[0]
    out = np.empty(ne, dtype=np.complex128)
    cdef cplx[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double te, w, scale = (omega / M_PI) * delta
    cdef cplx acc
    with nogil:
        for i in range(ne):
            te = eval_t[i]
            acc = 0
            for k in range(n):
                w = 0.5 if (k == 0 or k == n - 1) else 1.0
                acc = acc + (w * _sech(omega * (te - t0 - k * delta))) * x[k]
            ov[i] = acc * scale
    return out


cdef inline cplx _pair(cplx[::1] x, Py_ssize_t n, Py_ssize_t j, Py_ssize_t l) noexcept nogil:
    cdef cplx left = x[j - l] if j - l >= 0 else 0
    cdef cplx right = x[j + l] if j + l <= n - 1 else 0
    return left - right


cdef inline cplx _slope_limit(cplx[::1] x, Py_ssize_t n, Py_ssize_t j, Py_ssize_t L, double delta) noexcept nogil:
    # limit of kernel*pairing at u -> 0: b'(0)/pi; the 3-point odd-expansion
    # slope estimate is exact through delta^5
    cdef cplx b1, b2, b3
    if L >= 3:
        b1 = _pair(x, n, j, 1)
        b2 = _pair(x, n, j, 2)
        b3 = _pair(x, n, j, 3)
        return (45.0 * b1 - 9.0 * b2 + b3) / (30.0 * delta) / M_PI
    if L == 2:
        b1 = _pair(x, n, j, 1)
        b2 = _pair(x, n, j, 2)
        return (8.0 * b1 - b2) / (6.0 * delta) / M_PI
    if L == 1:
        return _pair(x, n, j, 1) / delta / M_PI
    return 0


def conv_sinh_pv_nodes(Py_ssize_t[::1] idx, cplx[::1] x, double delta, double omega,
                       Py_ssize_t lmax, bint use_split):
    cdef Py_ssize_t ni = idx.shape[0]
    cdef Py_ssize_t n = x.shape[0]
    out = np.empty(ni, dtype=np.complex128)
    cdef cplx[::1] ov = out
    cdef Py_ssize_t i, j, l, L
    cdef double u, kern
    cdef cplx acc
    with nogil:
        for i in range(ni):
            j = idx[i]
            L = j if j > n - 1 - j else n - 1 - j
            if lmax > 0 and L > lmax:
                L = lmax
            acc = 0
            for l in range(1, L + 1):
                u = l * delta
                if use_split:
                    kern = 1.0 / (M_PI * u) + _smooth_part(omega, u)
                else:
                    kern = (omega / M_PI) * _csch(omega * u)
                acc = acc + kern * _pair(x, n, j, l)
            ov[i] = delta * (0.5 * _slope_limit(x, n, j, L, delta) + acc)
    return out


def hilbert_pv_nodes(Py_ssize_t[::1] idx, cplx[::1] x, double delta, Py_ssize_t lmax):
    cdef Py_ssize_t ni = idx.shape[0]
    cdef Py_ssize_t n = x.shape[0]
    out = np.empty(ni, dtype=np.complex128)
    cdef cplx[::1] ov = out
    cdef Py_ssize_t i, j, l, L
    cdef double u
    cdef cplx acc
    with nogil:
        for i in range(ni):
            j = idx[i]
            L = j if j > n - 1 - j else n - 1 - j
            if lmax > 0 and L > lmax:
                L = lmax
            acc = 0
            for l in range(1, L + 1):
                u = l * delta
                acc = acc + _pair(x, n, j, l) / (M_PI * u)
            ov[i] = delta * (0.5 * _slope_limit(x, n, j, L, delta) + acc)
    return out
