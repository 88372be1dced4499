# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the innermost quadrature loops.

Same contracts as ``logcap._kernels.pure``; see there for documentation.
All array arguments are 1-D float64.
"""

from libc.math cimport cos, sqrt

import numpy as np

cdef double PI = 3.141592653589793238462643383279502884


def gap_moment_sums(double[::1] endpoints, Py_ssize_t gap, Py_ssize_t m, Py_ssize_t jmax):
    cdef Py_ssize_t n2 = endpoints.shape[0]
    cdef Py_ssize_t lo_i = 2 * gap + 1
    cdef Py_ssize_t hi_i = 2 * gap + 2
    cdef double lo = endpoints[lo_i]
    cdef double hi = endpoints[hi_i]
    cdef double mid = 0.5 * (lo + hi)
    cdef double half = 0.5 * (hi - lo)
    out_np = np.zeros(jmax + 1)
    cdef double[::1] out = out_np
    cdef Py_ssize_t r, f, j
    cdef double t, w, acc
    for r in range(m):
        t = mid + half * cos((2.0 * r + 1.0) * PI / (2.0 * m))
        w = 1.0
        for f in range(n2):
            if f != lo_i and f != hi_i:
                w *= t - endpoints[f]
        acc = 1.0 / sqrt(-w)
        for j in range(jmax + 1):
            out[j] += acc
            acc *= t
    for j in range(jmax + 1):
        out[j] *= PI / m
    return out_np


def poly_over_sqrt_q(double[::1] endpoints, double[::1] coeffs, double[::1] t):
    cdef Py_ssize_t n2 = endpoints.shape[0]
    cdef Py_ssize_t nc = coeffs.shape[0]
    out_np = np.empty(t.shape[0])
    cdef double[::1] out = out_np
    cdef Py_ssize_t i, f, j
    cdef double x, q, p
    for i in range(t.shape[0]):
        x = t[i]
        q = 1.0
        for f in range(n2):
            q *= x - endpoints[f]
        p = 1.0
        for j in range(nc - 1, -1, -1):
            p = p * x + coeffs[j]
        out[i] = p / sqrt(q)
    return out_np


def skip_product(double[::1] endpoints, Py_ssize_t skip, double[::1] t):
    cdef Py_ssize_t n2 = endpoints.shape[0]
    out_np = np.empty(t.shape[0])
    cdef double[::1] out = out_np
    cdef Py_ssize_t i, f
    cdef double x, w
    for i in range(t.shape[0]):
        x = t[i]
        w = 1.0
        for f in range(n2):
            if f != skip:
                w *= x - endpoints[f]
        out[i] = w
    return out_np
