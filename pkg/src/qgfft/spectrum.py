"""Spectra of the discrete operators ``I - T^{-1}A`` and ``N^2 (I - T^{-1}A)``."""
from dataclasses import dataclass

import numpy as np

from .graph import VertexSignal, edge_samples, signal_values, validate
from .linalg import gram_schmidt

CLUSTER_RTOL = 1e-8
RESIDUAL_TOL = 1e-10


class EigensolverError(np.linalg.LinAlgError):
    pass


@dataclass(frozen=True, eq=False)
class DiscreteSpectrum:
    """Distinct eigenvalues of ``I - T^{-1}A`` with their eigenvectors.

    ``vectors[i]`` has shape ``(V, multiplicity[i])``; columns are real and
    orthonormal for ``<f, g>_1 = (1 / 2|E|) sum_v deg(v) f(v) g(v)``.
    """

    mu: tuple
    multiplicity: tuple
    vectors: tuple

    def __len__(self):
        return len(self.mu)

    def to_json(self):
        cols = [col for block in self.vectors for col in block.T]
        return {
            "mu": [float(m) for m in self.mu],
            "multiplicity": [int(k) for k in self.multiplicity],
            "vectors": [[[float(x), 0.0] for x in col] for col in cols],
        }


def _cluster(values, rtol):
    groups = [[0]]
    for i in range(1, len(values)):
        prev = values[groups[-1][-1]]
        if values[i] - prev <= rtol * max(1.0, abs(prev)):
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _canonical_basis(vecs, weights):
    """Deterministic basis of span(vecs) from projected coordinate vectors."""
    k = vecs.shape[1]
    if k == 1:
        return vecs
    # orthogonal projection (weighted inner product) of every e_i onto the span
    proj = vecs @ (vecs.T * weights)
    gram = (proj.T * weights) @ proj
    b = gram_schmidt(gram, rtol=1e-6, drop_dependent=True)
    if b.shape[0] < k:
        return vecs
    return (proj @ b[:k].T).real


def _fix_signs(vecs, tol=1e-12):
    out = vecs.copy()
    for j in range(out.shape[1]):
        nz = np.flatnonzero(np.abs(out[:, j]) > tol * np.max(np.abs(out[:, j])))
        if nz.size and out[nz[0], j] < 0:
            out[:, j] = -out[:, j]
    return out


def eigensolve_delta1(graph, cluster_rtol=CLUSTER_RTOL):
    """Eigendecomposition of ``Delta_1 = I - T^{-1} A``.

    Solved through the symmetric matrix ``I - T^{-1/2} A T^{-1/2}`` and
    mapped back by ``w -> T^{-1/2} w``.  Eigenvalues within ``cluster_rtol``
    are merged; each cluster's basis is canonicalised by Gram-Schmidt over
    the projected coordinate vectors and signs are fixed so the first
    nonzero entry is positive.
    """
    validate(graph)
    deg = graph.degrees.astype(float)
    isq = 1.0 / np.sqrt(deg)
    sym = np.eye(graph.vertex_count) - isq[:, None] * graph.adjacency_matrix() * isq[None, :]
    evals, evecs = np.linalg.eigh(sym)
    evals = np.clip(evals, 0.0, 2.0)
    total = 2.0 * graph.edge_count
    vecs = np.sqrt(total) * isq[:, None] * evecs
    weights = deg / total

    mus, mults, blocks = [], [], []
    norm_adj = graph.adjacency_matrix() / deg[:, None]
    for group in _cluster(evals, cluster_rtol):
        mu = float(np.mean(evals[group]))
        if abs(mu) < 1e-12:
            mu = 0.0
        elif abs(mu - 2.0) < 1e-12:
            mu = 2.0
        block = _fix_signs(_canonical_basis(vecs[:, group], weights))
        resid = np.max(np.abs(block - norm_adj @ block - mu * block)) / max(1.0, np.max(np.abs(block)))
        if resid > RESIDUAL_TOL:
            raise EigensolverError(f"eigenpair residual {resid:.3e} at mu={mu:.15g}")
        mus.append(mu)
        mults.append(len(group))
        blocks.append(block)
    return DiscreteSpectrum(tuple(mus), tuple(mults), tuple(blocks))


def delta_N_eigenvalue(lam, N):
    """``N^2 (1 - cos(sqrt(lam) / N))``, evaluated as ``2 N^2 sin^2(sqrt(lam) / 2N)``."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 0):
        raise ValueError("lambda must be non-negative")
    out = 2.0 * N * N * np.sin(np.sqrt(lam) / (2.0 * N)) ** 2
    return float(out) if out.ndim == 0 else out


def apply_delta_N(f, graph, N):
    """``N^2 (f(v) - mean of the G_N neighbours of v)`` at every vertex of ``G_N``."""
    values = signal_values(f, graph, N)
    s = edge_samples(values, graph, N)
    out = np.empty_like(values)
    if N > 1:
        interior = s[:, 1:-1] - 0.5 * (s[:, :-2] + s[:, 2:])
        out[graph.vertex_count:] = interior.reshape(-1)
    nbr_sum = np.zeros(graph.vertex_count, dtype=values.dtype)
    np.add.at(nbr_sum, graph.tails, s[:, 1])
    np.add.at(nbr_sum, graph.heads, s[:, -2])
    nv = graph.vertex_count
    out[:nv] = values[:nv] - nbr_sum / graph.degrees
    out *= N * N
    return VertexSignal(N, out)
