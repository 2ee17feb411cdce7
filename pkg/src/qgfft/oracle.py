"""Slow reference implementations for cross-checking the fast paths.

Everything here sums left to right in plain Python and evaluates basis
functions pointwise with :mod:`cmath`; nothing is shared with the FFT
code path beyond the primitive coefficients themselves.
"""
import cmath
import math

import numpy as np

from .graph import signal_values
from .transform import GraphDFT


def _point_value(coeffs, omega, e, x):
    a, b = coeffs[e]
    return a * cmath.exp(1j * omega * x) + b * cmath.exp(-1j * omega * x)


def restricted_vector(coeffs, omega, graph, N):
    """Values of one edge function at all vertices of ``G_N``, point by point."""
    out = []
    for v in range(graph.vertex_count):
        e = graph.incident_edges[v][0]
        x = 0.0 if graph.edges[e][0] == v else 1.0
        out.append(_point_value(coeffs, omega, e, x))
    for e in range(graph.edge_count):
        for n in range(1, N):
            out.append(_point_value(coeffs, omega, e, n / N))
    return out


def _weights(graph, N):
    deg = [float(d) for d in graph.degrees] + [2.0] * ((N - 1) * graph.edge_count)
    total = 2.0 * N * graph.edge_count
    return [d / total for d in deg]


def _ip(f, g, w):
    acc = 0j
    for fv, gv, wv in zip(f, g, w):
        acc += wv * fv * gv.conjugate()
    return acc


def _nyquist_vector(graph, N):
    return [1.0 + 0j] * graph.vertex_count + [
        complex((-1) ** n) for _ in range(graph.edge_count) for n in range(1, N)
    ]


def restricted_blocks(basis):
    """``{(m, k): [Phi_1, ..., Phi_I]}`` as lists of Python complex numbers."""
    graph, N = basis.graph, basis.N
    out = {}
    for k, blk in enumerate(basis.blocks):
        for m, omega in enumerate(basis.omegas(k)):
            out[(m, k)] = [restricted_vector(c, float(omega), graph, N) for c in blk.coeffs]
    return out


def naive_forward(f, basis):
    """Every DFT entry as a direct degree-weighted sum over ``G_N``."""
    graph, N = basis.graph, basis.N
    values = [complex(z) for z in signal_values(f, graph, N)]
    w = _weights(graph, N)
    phis = restricted_blocks(basis)
    zero = _ip(values, [1.0 + 0j] * len(values), w)
    nyq = _ip(values, _nyquist_vector(graph, N), w)
    blocks = []
    for k, blk in enumerate(basis.blocks):
        arr = np.zeros((basis.shifts[k], blk.dim), dtype=complex)
        for m in range(basis.shifts[k]):
            for j, phi in enumerate(phis[(m, k)]):
                arr[m, j] = _ip(values, phi, w)
        blocks.append(arr)
    return GraphDFT(zero, tuple(blocks), nyq)


def naive_inverse(dft, basis):
    """Reconstruct the signal by solving each block's Gram system and summing literally."""
    graph, N = basis.graph, basis.N
    w = _weights(graph, N)
    phis = restricted_blocks(basis)
    size = graph.refined_size(N)
    nyq_vec = _nyquist_vector(graph, N)
    out = [dft.zero + dft.nyquist / _ip(nyq_vec, nyq_vec, w) * nyq_vec[i] for i in range(size)]
    for (m, k), vecs in phis.items():
        gram = np.array([[_ip(p, q, w) for q in vecs] for p in vecs])
        c = np.linalg.solve(gram.T, np.asarray(dft.blocks[k][m]))
        for j, phi in enumerate(vecs):
            for i in range(size):
                out[i] += c[j] * phi[i]
    return np.array(out)


def quadrature_inner_product(f, g, points_per_edge=10_000):
    """``<f, g>_inf`` by composite Simpson with ``points_per_edge`` intervals per edge."""
    if points_per_edge % 2 or points_per_edge < 100:
        raise ValueError("points_per_edge must be even and at least 100")
    x = np.linspace(0.0, 1.0, points_per_edge + 1)
    wts = np.ones(points_per_edge + 1)
    wts[1:-1:2] = 4.0
    wts[2:-1:2] = 2.0
    wts *= (x[1] - x[0]) / 3.0
    prod = f.evaluate(x) * np.conj(g.evaluate(x))
    return complex(np.sum(prod @ wts) / f.edge_count)


def direct_dft(v, inverse=False):
    """Literal ``O(N^2)`` DFT; the inverse divides by ``N``."""
    v = [complex(z) for z in v]
    n = len(v)
    sign = 1.0 if inverse else -1.0
    out = []
    for m in range(n):
        acc = 0j
        for k, z in enumerate(v):
            acc += z * cmath.exp(sign * 2j * math.pi * m * k / n)
        out.append(acc / n if inverse else acc)
    return np.array(out)
