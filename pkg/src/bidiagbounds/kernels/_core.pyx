# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled trace sweeps: term-for-term mirror of the plain-float path in
``_sweeps.py``, kept in the same evaluation order so both backends produce
identical doubles."""

from libc.math cimport isfinite

import numpy as np


def trace_type1(const double[::1] b, const double[::1] c, int m):
    """Forward sweep returning [J_1 .. J_m] as a list of doubles."""
    cdef Py_ssize_t n = b.shape[0]
    cdef Py_ssize_t i, p, k, r
    cdef double ib, f, tmp, fact, v, pd

    C_arr = np.zeros((m + 1, m + 2), dtype=np.float64)
    cdef double[:, ::1] C = C_arr
    C[1, 1] = 1.0
    for p in range(2, m + 1):
        C[p, 1] = <double> p
        for k in range(2, p):
            C[p, k] = C[p - 1, k - 1] + C[p - 1, k]
        C[p, p] = 1.0

    h_arr = np.zeros(m + 1, dtype=np.float64)
    hp_arr = np.zeros(m + 1, dtype=np.float64)
    H_arr = np.zeros(m + 1, dtype=np.float64)
    s_arr = np.zeros(m + 1, dtype=np.float64)
    cdef double[::1] h = h_arr
    cdef double[::1] hp = hp_arr
    cdef double[::1] H = H_arr
    cdef double[::1] sums = s_arr

    ib = 1.0 / (b[0] * b[0])
    h[1] = ib
    H[1] = h[1]
    for p in range(2, m + 1):
        h[p] = 0.0
        H[p] = C[p - 1, 1] * h[1] * H[p - 1]
    for p in range(1, m + 1):
        sums[p] = H[p]

    for i in range(1, n):
        ib = 1.0 / (b[i] * b[i])
        f = c[i - 1] * c[i - 1] * ib
        h, hp = hp, h
        h[1] = f * hp[1] + ib
        for p in range(2, m + 1):
            pd = <double> p
            tmp = 0.0
            for k in range(1, p - 1):
                tmp = tmp + C[p, k] * hp[k] * h[p - k]
            h[p] = f * (hp[p] + pd * hp[1] * hp[p - 1]) + tmp
        H[1] = h[1]
        for p in range(2, m + 1):
            tmp = 0.0
            for k in range(1, p):
                tmp = tmp + C[p - 1, k] * h[k] * H[p - k]
            H[p] = h[p] + tmp
        for p in range(1, m + 1):
            sums[p] = sums[p] + H[p]

    J = []
    fact = 1.0
    for p in range(1, m + 1):
        if isfinite(fact):
            J.append(sums[p] / fact)
        else:
            v = sums[p]
            for r in range(2, p):
                v = v / (<double> r)
            J.append(v)
        fact = fact * (<double> p)
    return J


def trace_type2(const double[::1] b, const double[::1] c, int m):
    """Backward sweep returning [J_1 .. J_m] as a list of doubles."""
    cdef Py_ssize_t n = b.shape[0]
    cdef Py_ssize_t i, p, k, r
    cdef double ib, f, tmp, fact, v, pd

    C_arr = np.zeros((m + 1, m + 2), dtype=np.float64)
    cdef double[:, ::1] C = C_arr
    C[1, 1] = 1.0
    for p in range(2, m + 1):
        C[p, 1] = <double> p
        for k in range(2, p):
            C[p, k] = C[p - 1, k - 1] + C[p - 1, k]
        C[p, p] = 1.0

    h_arr = np.zeros(m + 1, dtype=np.float64)
    hp_arr = np.zeros(m + 1, dtype=np.float64)
    H_arr = np.zeros(m + 1, dtype=np.float64)
    s_arr = np.zeros(m + 1, dtype=np.float64)
    cdef double[::1] h = h_arr
    cdef double[::1] hp = hp_arr
    cdef double[::1] H = H_arr
    cdef double[::1] sums = s_arr

    ib = 1.0 / (b[n - 1] * b[n - 1])
    h[1] = ib
    H[1] = h[1]
    for p in range(2, m + 1):
        h[p] = 0.0
        H[p] = C[p - 1, 1] * h[1] * H[p - 1]
    for p in range(1, m + 1):
        sums[p] = H[p]

    for i in range(n - 2, -1, -1):
        ib = 1.0 / (b[i] * b[i])
        f = c[i] * c[i] * ib
        h, hp = hp, h
        h[1] = f * hp[1] + ib
        for p in range(2, m + 1):
            pd = <double> p
            tmp = 0.0
            for k in range(1, p - 1):
                tmp = tmp + C[p, k] * hp[k] * h[p - k]
            h[p] = f * (hp[p] + pd * hp[1] * hp[p - 1]) + tmp
        H[1] = h[1]
        for p in range(2, m + 1):
            tmp = 0.0
            for k in range(1, p):
                tmp = tmp + C[p - 1, k] * h[k] * H[p - k]
            H[p] = h[p] + tmp
        for p in range(1, m + 1):
            sums[p] = sums[p] + H[p]

    J = []
    fact = 1.0
    for p in range(1, m + 1):
        if isfinite(fact):
            J.append(sums[p] / fact)
        else:
            v = sums[p]
            for r in range(2, p):
                v = v / (<double> r)
            J.append(v)
        fact = fact * (<double> p)
    return J


def trace_fast2(const double[::1] b, const double[::1] c):
    """Single-loop (J_1, J_2) kernel."""
    cdef Py_ssize_t n = b.shape[0]
    cdef Py_ssize_t i
    cdef double h1, ph, h2, j1, j2, ib, f

    h1 = 1.0 / (b[0] * b[0])
    ph = h1 * h1
    h2 = ph
    j2 = h2
    j1 = h1
    for i in range(1, n):
        ib = 1.0 / (b[i] * b[i])
        f = c[i - 1] * c[i - 1] * ib
        h2 = f * (h2 + ph)
        h1 = f * h1 + ib
        ph = h1 * h1
        h2 = h2 + ph
        j2 = j2 + h2
        j1 = j1 + h1
    return j1, j2
