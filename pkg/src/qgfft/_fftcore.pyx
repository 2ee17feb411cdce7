"""Compiled radix-2 kernel: in-place iterative decimation in time, row-wise."""
import numpy as np

from libc.math cimport cos, sin, M_PI


def fft_rows(double complex[:, ::1] data, bint inverse=False):
    """Transform every row of ``data`` in place.

    Row length must be a power of two; the caller checks this.
    """
    cdef Py_ssize_t rows = data.shape[0]
    cdef Py_ssize_t n = data.shape[1]
    cdef Py_ssize_t r, i, j, bit, size, half, step, start, k
    cdef double sign = 1.0 if inverse else -1.0
    cdef double angle, scale
    cdef double complex u, t, w
    if n < 2:
        return
    cdef double complex[::1] tw = np.empty(n // 2, dtype=np.complex128)
    cdef Py_ssize_t[::1] rev = np.empty(n, dtype=np.intp)

    for k in range(n // 2):
        angle = 2.0 * M_PI * k / n
        tw[k] = cos(angle) + 1j * sign * sin(angle)

    j = 0
    rev[0] = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        rev[i] = j

    with nogil:
        for r in range(rows):
            for i in range(n):
                j = rev[i]
                if j > i:
                    u = data[r, i]
                    data[r, i] = data[r, j]
                    data[r, j] = u
            size = 2
            while size <= n:
                half = size >> 1
                step = n // size
                start = 0
                while start < n:
                    for k in range(half):
                        w = tw[k * step]
                        u = data[r, start + k]
                        t = w * data[r, start + k + half]
                        data[r, start + k] = u + t
                        data[r, start + k + half] = u - t
                    start += size
                size <<= 1
        if inverse:
            scale = 1.0 / n
            for r in range(rows):
                for i in range(n):
                    data[r, i] = data[r, i] * scale
