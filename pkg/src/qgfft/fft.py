"""Radix-2 FFT entry point with compiled/pure-Python backend selection.

The compiled kernel (``qgfft._fftcore``) is used when it was built; set
``QGFFT_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _fft_py

try:
    if os.environ.get("QGFFT_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _fftcore
except ImportError:
    _fftcore = None

_KERNELS = {"python": _fft_py.fft_rows}
if _fftcore is not None:
    _KERNELS["cython"] = _fftcore.fft_rows

BACKEND = "cython" if "cython" in _KERNELS else "python"


def available_backends():
    return sorted(_KERNELS)


def is_power_of_two(n):
    return isinstance(n, (int, np.integer)) and n >= 1 and (n & (n - 1)) == 0


def radix2_fft(v, direction="forward", backend=None):
    """Standard DFT along the last axis of a 1-D or 2-D array.

    ``forward`` computes ``X[m] = sum_n v[n] exp(-2 pi i m n / N)``;
    ``inverse`` uses the opposite sign and divides by ``N``.

    Parameters
    ----------
    v : array_like
        Complex data; the last axis length must be a power of two.
    direction : {"forward", "inverse"}
    backend : {"cython", "python"}, optional
        Defaults to the backend selected at import.

    Returns
    -------
    numpy.ndarray
        New array of the same shape; the input is not modified.
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    kernel = _KERNELS[backend or BACKEND]
    arr = np.array(v, dtype=np.complex128, copy=True)
    n = arr.shape[-1] if arr.ndim else 0
    if arr.ndim not in (1, 2) or not is_power_of_two(n):
        raise ValueError(f"length must be a power of two, got shape {arr.shape}")
    rows = np.ascontiguousarray(arr.reshape(-1, n))
    kernel(rows, direction == "inverse")
    return rows.reshape(arr.shape)
