"""Restriction of eigenfunctions to the refinement ``G_N`` and trapezoid sums."""
import math

import numpy as np

from .eigenbasis import continuous_inner_product
from .graph import VertexSignal, assemble_signal, vertex_inner_product

__all__ = [
    "VertexSignal",
    "restrict",
    "trapezoid",
    "trapezoid_exp",
    "m0",
    "m1",
    "inner_product_error",
]


def restrict(psi, graph, N):
    """Evaluate ``psi`` at every vertex of ``G_N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    x = np.arange(N + 1) / N * psi.edge_length
    return assemble_signal(psi.evaluate(x), graph)


def trapezoid(edge_samples):
    """``T_N(f) = (1/2N) [f(x_0) + f(x_N) + 2 sum_{0<n<N} f(x_n)]`` along the last axis."""
    s = np.asarray(edge_samples)
    if s.shape[-1] < 2:
        raise ValueError("trapezoid needs at least two samples")
    N = s.shape[-1] - 1
    return (s[..., 0] + s[..., -1] + 2.0 * np.sum(s[..., 1:-1], axis=-1)) / (2.0 * N)


def trapezoid_exp(theta, N):
    """Closed form of ``T_N(exp(i theta x))`` for ``|theta| < 2 pi N``.

    Equals ``(1 - e^{i theta}) i cot(theta / 2N) / 2N``, i.e.
    ``m0(theta / 2N) * int_0^1 exp(i theta x) dx``.
    """
    theta = np.asarray(theta, dtype=float)
    z = theta / (2.0 * N)
    small = np.abs(z) < 1e-8
    safe = np.where(small, 1.0, z)
    out = (1.0 - np.exp(1j * theta)) * 1j / np.tan(safe) / (2.0 * N)
    out = np.where(small, np.exp(0.5j * theta), out)
    return complex(out) if out.ndim == 0 else out


def _check_pole(z):
    if np.any(np.abs(z) >= math.pi):
        raise ValueError("|z| must be below pi")


def m0(z):
    """``z cot(z)`` for ``|z| < pi``, by series near the origin."""
    z = np.asarray(z, dtype=float)
    _check_pole(z)
    z2 = z * z
    series = 1.0 - z2 / 3.0 - z2 * z2 / 45.0 - 2.0 * z2 ** 3 / 945.0 - z2 ** 4 / 4725.0
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = z / np.tan(z)
    out = np.where(np.abs(z) < 1e-2, series, direct)
    return float(out) if out.ndim == 0 else out


def m1(z):
    """``1 - z cot(z) - z^2 / 3``, which is ``O(z^4)`` at the origin."""
    z = np.asarray(z, dtype=float)
    _check_pole(z)
    z2 = z * z
    series = z2 * z2 / 45.0 + 2.0 * z2 ** 3 / 945.0 + z2 ** 4 / 4725.0
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = 1.0 - z / np.tan(z) - z2 / 3.0
    out = np.where(np.abs(z) < 1e-2, series, direct)
    return float(out) if out.ndim == 0 else out


def inner_product_error(f, g, graph, N, rtol=1e-9):
    """Compare ``<R_N f, R_N g>_N`` with ``<f, g>_inf`` for one eigenspace.

    Returns ``(discrete, continuous, discrete - continuous)``.  ``f`` and
    ``g`` must share a frequency in ``(0, N pi]``.
    """
    if abs(f.omega - g.omega) > rtol * max(1.0, f.omega):
        raise ValueError("f and g belong to different eigenspaces")
    if f.omega <= 0.0:
        raise ValueError("the zero eigenspace is excluded")
    if f.omega > N * math.pi * (1.0 + rtol):
        raise ValueError("frequency exceeds the Nyquist limit N pi")
    disc = vertex_inner_product(restrict(f, graph, N), restrict(g, graph, N), graph, N)
    cont = continuous_inner_product(f, g)
    return disc, cont, disc - cont
