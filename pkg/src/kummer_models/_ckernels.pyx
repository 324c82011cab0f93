# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernel over Z/q[x]/(E(x)).

Rows of ``a`` and ``b`` are coefficient vectors in x (length e); each row
sits at an additive offset in the flattened output layout.  The product is
accumulated in int64, reduced mod q, then folded from degree 2e-2 down to
e-1 with the precomputed table ``red`` (row h holds x^(e+h) mod E).
"""
import numpy as np
from libc.stdint cimport int64_t


def conv_reduce(const int64_t[:, ::1] a, const int64_t[::1] off_a,
                const int64_t[:, ::1] b, const int64_t[::1] off_b,
                Py_ssize_t nout, const int64_t[:, ::1] red, int64_t q):
    cdef Py_ssize_t ka = a.shape[0], kb = b.shape[0], e = a.shape[1]
    cdef Py_ssize_t i, j, s, t, row, h
    cdef int64_t x
    acc_np = np.zeros((nout, 2 * e - 1), dtype=np.int64)
    out_np = np.zeros((nout, e), dtype=np.int64)
    cdef int64_t[:, ::1] acc = acc_np
    cdef int64_t[:, ::1] out = out_np
    cdef char[::1] used = np.zeros(nout, dtype=np.int8)
    nz_b_np = np.flatnonzero(np.asarray(b).any(axis=1)).astype(np.int64)
    cdef int64_t[::1] nz_b = nz_b_np
    cdef Py_ssize_t nb = nz_b.shape[0], jj

    for i in range(ka):
        for s in range(e):
            if a[i, s] != 0:
                break
        else:
            continue
        for jj in range(nb):
            j = nz_b[jj]
            row = off_a[i] + off_b[j]
            used[row] = 1
            for s in range(e):
                x = a[i, s]
                if x == 0:
                    continue
                for t in range(e):
                    acc[row, s + t] += x * b[j, t]

    for row in range(nout):
        if not used[row]:
            continue
        for s in range(2 * e - 1):
            acc[row, s] %= q
        for t in range(e):
            out[row, t] = acc[row, t]
        for h in range(e - 1):
            x = acc[row, e + h]
            if x == 0:
                continue
            for t in range(e):
                out[row, t] += x * red[h, t]
        for t in range(e):
            out[row, t] %= q
    return out_np
