"""Pure-Python radix-2 kernel (numpy-vectorised across butterflies)."""
import numpy as np


def bit_reversal_permutation(n):
    """Return the index array ``rev`` with ``rev[i]`` the bit reversal of ``i``."""
    bits = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.intp)
    idx = np.arange(n)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def fft_rows(data, inverse=False):
    """Transform every row of the C-contiguous complex array ``data`` in place."""
    rows, n = data.shape
    if n < 2:
        return
    sign = 1.0 if inverse else -1.0
    data[:] = data[:, bit_reversal_permutation(n)]
    half = 1
    while half < n:
        tw = np.exp(sign * 1j * np.pi * np.arange(half) / half)
        view = data.reshape(rows, n // (2 * half), 2, half)
        top = view[:, :, 0, :].copy()
        bottom = view[:, :, 1, :] * tw
        view[:, :, 0, :] = top + bottom
        view[:, :, 1, :] = top - bottom
        half *= 2
    if inverse:
        data /= n
