"""Block-structured graph DFT and its FFT evaluation.

For a refinement level ``N`` (a power of two) the vertex space of ``G_N``
splits into eigenspaces of ``Delta_N``:

* the constants (zero block);
* for each primitive frequency ``omega_{0,k}`` and shift ``m`` with
  ``omega_{m,k} = omega_{0,k} + 2 pi m < N pi``, the restriction of the
  shifted primitive basis (block ``(m, k)``);
* the restriction of ``cos(N pi x)`` (Nyquist block).

The forward transform collects ``<f, Phi_j(omega_{m,k})>_N``; for fixed
edge and primitive these are one length-``N`` FFT of the modulated edge
samples plus an ``m``-independent endpoint correction.
"""
import math
from dataclasses import dataclass

import numpy as np

from .eigenbasis import TWO_PI, exp_moment, primitive_spectrum
from .fft import is_power_of_two, radix2_fft
from .graph import assemble_signal, edge_samples, signal_values, validate
from .linalg import gram_schmidt
from .sampling import trapezoid, trapezoid_exp
from .spectrum import delta_N_eigenvalue


class CompletenessError(RuntimeError):
    """The assembled blocks do not add up to the dimension of the vertex space."""


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """Precomputed blocks for one ``(graph, N)`` pair.

    Per primitive ``k``: ``gram[k][m, j, p] = <Phi_j, Phi_p>_N``,
    ``change[k][m]`` is the lower-triangular Gram-Schmidt matrix ``B``
    (rows ``eta_i = sum_j B[i, j] Phi_j``) and ``recovery[k][m] = B^* B``.
    """

    graph: object
    N: int
    primitive: object
    shifts: tuple
    gram: tuple
    change: tuple
    recovery: tuple
    nyquist_norm: float

    @property
    def blocks(self):
        return self.primitive.blocks

    def omegas(self, k):
        return self.blocks[k].omega + TWO_PI * np.arange(self.shifts[k])

    @property
    def dimension(self):
        return 2 + sum(m * b.dim for m, b in zip(self.shifts, self.blocks))

    def block_order(self):
        """``(m, k)`` pairs in ascending frequency."""
        return sorted((m, k) for k, mk in enumerate(self.shifts) for m in range(mk))

    def eigenvalues(self):
        """``Delta_N`` eigenvalue for the zero block, each ``(m, k)`` block and Nyquist."""
        return (
            0.0,
            [delta_N_eigenvalue(self.omegas(k) ** 2, self.N) for k in range(len(self.blocks))],
            2.0 * self.N ** 2,
        )


@dataclass(frozen=True, eq=False)
class GraphDFT:
    """Block-structured vector matching a :class:`SpectralBasis`.

    Holds raw inner products ``<f, Phi_j(omega_{m,k})>_N`` (from
    :func:`fft_forward`) or expansion coefficients (from
    :func:`coefficients`).  ``blocks[k]`` has shape ``(M_k, I_k)``.
    """

    zero: complex
    blocks: tuple
    nyquist: complex

    def block(self, m, k):
        return self.blocks[k][m]

    def flat(self):
        return np.concatenate([[self.zero], *(b.reshape(-1) for b in self.blocks), [self.nyquist]])

    def map(self, fn):
        return GraphDFT(fn(self.zero), tuple(fn(b) for b in self.blocks), fn(self.nyquist))

    def __add__(self, other):
        return GraphDFT(
            self.zero + other.zero,
            tuple(a + b for a, b in zip(self.blocks, other.blocks)),
            self.nyquist + other.nyquist,
        )

    def __mul__(self, scalar):
        return self.map(lambda x: x * scalar)

    __rmul__ = __mul__


def _check_shapes(dft, basis):
    if len(dft.blocks) != len(basis.blocks):
        raise ValueError("DFT and basis have different numbers of primitive blocks")
    for k, (arr, mk, b) in enumerate(zip(dft.blocks, basis.shifts, basis.blocks)):
        if np.shape(arr) != (mk, b.dim):
            raise ValueError(f"block {k} has shape {np.shape(arr)}, expected {(mk, b.dim)}")


def build_basis(graph, N, primitive=None):
    """Assemble the block basis of the vertex space of ``G_N``.

    Raises
    ------
    ValueError
        ``N`` is not a power of two (at least 2).
    CompletenessError
        The block dimensions do not sum to ``V + (N - 1) E``.
    """
    if not is_power_of_two(N) or N < 2:
        raise ValueError(f"N must be a power of two >= 2, got {N}")
    validate(graph)
    if primitive is None:
        primitive = primitive_spectrum(graph)
    ne = graph.edge_count
    shifts, grams, changes, recs = [], [], [], []
    for blk in primitive.blocks:
        mk = N // 2 - 1 if blk.kind == "2pi" else N // 2
        omegas = blk.omega + TWO_PI * np.arange(mk)
        a, b = blk.coeffs[:, :, 0], blk.coeffs[:, :, 1]
        if blk.special:
            # restriction preserves inner products at integer multiples of pi below N pi
            cross = exp_moment(2.0 * omegas)
        else:
            cross = trapezoid_exp(2.0 * omegas, N)
        cross = np.asarray(cross).reshape(-1, 1, 1)
        base = a @ a.conj().T + b @ b.conj().T
        gram = (base + cross * (a @ b.conj().T) + cross.conj() * (b @ a.conj().T)) / ne
        change = gram_schmidt(gram) if mk else gram.copy()
        shifts.append(mk)
        grams.append(gram)
        changes.append(change)
        recs.append(np.einsum("mij,mil->mjl", change.conj(), change))
    basis = SpectralBasis(
        graph, N, primitive, tuple(shifts), tuple(grams), tuple(changes), tuple(recs),
        nyquist_norm=1.0,
    )
    expected = graph.refined_size(N)
    if basis.dimension != expected:
        raise CompletenessError(
            f"block dimensions sum to {basis.dimension}, vertex space has {expected}"
        )
    return basis


def _nyquist_pattern(N):
    return np.where(np.arange(N + 1) % 2 == 0, 1.0, -1.0)


def fft_forward(f, basis, backend=None):
    """Raw DFT ``<f, Phi_j(omega_{m,k})>_N`` of every block in ``O(N log N)``."""
    graph, N = basis.graph, basis.N
    values = signal_values(f, graph, N)
    s = edge_samples(values, graph, N)
    ne = graph.edge_count
    weights = graph.refined_degrees(N)
    total = 2.0 * N * ne
    zero = complex(np.sum(weights * values) / total)
    nyquist = complex(np.sum(trapezoid(s * _nyquist_pattern(N))) / ne)

    w0 = np.array([b.omega for b in basis.blocks])
    n = np.arange(N)
    phase = np.exp(-1j * np.outer(w0, n) / N)  # (K, N)
    body = s[None, :, :N]
    rows = np.concatenate([body * phase[:, None, :], body * phase.conj()[:, None, :]], axis=0)
    spec = radix2_fft(rows.reshape(-1, N), "forward", backend).reshape(2, len(w0), ne, N)
    head, tail = s[:, N], s[:, 0]
    ends = np.exp(-1j * w0)[:, None]
    corr_minus = (head[None, :] * ends - tail[None, :]) / (2 * N)
    corr_plus = (head[None, :] * ends.conj() - tail[None, :]) / (2 * N)
    neg = (-np.arange(N)) % N

    blocks = []
    for k, (blk, mk) in enumerate(zip(basis.blocks, basis.shifts)):
        t_minus = spec[0, k, :, :mk] / N + corr_minus[k][:, None]
        t_plus = spec[1, k][:, neg[:mk]] / N + corr_plus[k][:, None]
        a, b = blk.coeffs[:, :, 0], blk.coeffs[:, :, 1]
        raw = (t_minus.T @ a.conj().T + t_plus.T @ b.conj().T) / ne
        blocks.append(raw)
    return GraphDFT(zero, tuple(blocks), nyquist)


def coefficients(dft, basis):
    """Expansion coefficients ``c_l = sum_j (B^* B)_{jl} X_j`` in every block."""
    _check_shapes(dft, basis)
    blocks = tuple(
        np.einsum("mjl,mj->ml", rec, np.asarray(x)) for rec, x in zip(basis.recovery, dft.blocks)
    )
    return GraphDFT(dft.zero, blocks, dft.nyquist / basis.nyquist_norm)


def synthesize(coeffs, basis, backend=None, tol=1e-8):
    """Vertex signal ``sum c_j(omega_{m,k}) Phi_j(omega_{m,k})`` in ``O(N log N)``."""
    _check_shapes(coeffs, basis)
    graph, N = basis.graph, basis.N
    ne = graph.edge_count
    nk = len(basis.blocks)
    alpha = np.zeros((nk, ne, N), dtype=complex)
    beta = np.zeros((nk, ne, N), dtype=complex)
    for k, (blk, c) in enumerate(zip(basis.blocks, coeffs.blocks)):
        mk = basis.shifts[k]
        alpha[k, :, :mk] = (np.asarray(c) @ blk.coeffs[:, :, 0]).T
        beta[k, :, :mk] = (np.asarray(c) @ blk.coeffs[:, :, 1]).T
    # sum_m alpha_m exp(+2 pi i m n / N) is N times the inverse DFT
    plus = radix2_fft(alpha.reshape(-1, N), "inverse", backend).reshape(nk, ne, N)
    plus *= N
    minus = radix2_fft(beta.reshape(-1, N), "forward", backend).reshape(nk, ne, N)
    n = np.arange(N)
    samples = np.empty((ne, N + 1), dtype=complex)
    samples[:, :N] = coeffs.zero + coeffs.nyquist * _nyquist_pattern(N)[:N]
    for k, blk in enumerate(basis.blocks):
        ph = np.exp(1j * blk.omega * n / N)
        samples[:, :N] += ph * plus[k] + ph.conj() * minus[k]
    # x = 1 wraps to n = 0 of the 2 pi m grid, with the primitive phase exp(+-i omega_0)
    ends = np.array([[np.exp(1j * b.omega), np.exp(-1j * b.omega)] for b in basis.blocks])
    samples[:, N] = (
        coeffs.zero + coeffs.nyquist * _nyquist_pattern(N)[N]
        + np.einsum("k,ke->e", ends[:, 0], plus[:, :, 0])
        + np.einsum("k,ke->e", ends[:, 1], minus[:, :, 0])
    )
    return assemble_signal(samples, graph, tol=tol)


def fft_inverse(dft, basis, backend=None):
    """Recover the vertex signal from its raw DFT."""
    return synthesize(coefficients(dft, basis), basis, backend)


def parseval_norm(dft, basis):
    """``||f||_N^2`` from the raw DFT: ``|zero|^2 + sum ||conj(B) X||^2 + |nyquist|^2``."""
    _check_shapes(dft, basis)
    total = abs(dft.zero) ** 2 + abs(dft.nyquist) ** 2 / basis.nyquist_norm
    for change, x in zip(basis.change, dft.blocks):
        y = np.einsum("mij,mj->mi", change.conj(), np.asarray(x))
        total += float(np.sum(np.abs(y) ** 2))
    return float(total)


def spectral_filter(f, basis, keep, backend=None):
    """Zero every block whose eigenvalue ``lambda = omega^2`` fails ``keep(lambda)``."""
    dft = fft_forward(f, basis, backend)
    zero = dft.zero if keep(0.0) else 0j
    nyq = dft.nyquist if keep((basis.N * math.pi) ** 2) else 0j
    blocks = []
    for k, x in enumerate(dft.blocks):
        mask = np.array([bool(keep(w * w)) for w in basis.omegas(k)], dtype=bool)
        blocks.append(np.where(mask[:, None], x, 0))
    return fft_inverse(GraphDFT(zero, tuple(blocks), nyq), basis, backend)


def dft_to_json(dft, basis):
    coeffs = coefficients(dft, basis)
    pair = lambda z: [float(np.real(z)), float(np.imag(z))]  # noqa: E731
    blocks = []
    for m, k in basis.block_order():
        blocks.append({
            "k": k,
            "m": m,
            "omega": float(basis.omegas(k)[m]),
            "raw": [pair(z) for z in dft.blocks[k][m]],
            "coeffs": [pair(z) for z in coeffs.blocks[k][m]],
        })
    return {"zero": pair(dft.zero), "nyquist": pair(dft.nyquist), "blocks": blocks}


def dft_from_json(data, basis):
    """Parse DFT JSON against ``basis``; the ``raw`` entries are authoritative."""
    try:
        blocks = [np.zeros((mk, b.dim), dtype=complex) for mk, b in zip(basis.shifts, basis.blocks)]
        seen = set()
        for item in data["blocks"]:
            k, m = int(item["k"]), int(item["m"])
            if not (0 <= k < len(blocks) and 0 <= m < basis.shifts[k]):
                raise ValueError(f"block (m={m}, k={k}) does not exist for N={basis.N}")
            raw = np.array([complex(re, im) for re, im in item["raw"]])
            if raw.shape != (basis.blocks[k].dim,):
                raise ValueError(f"block (m={m}, k={k}) has {raw.size} entries")
            blocks[k][m] = raw
            seen.add((m, k))
        if len(seen) != sum(basis.shifts):
            raise ValueError("DFT JSON is missing blocks")
        zero = complex(*data["zero"])
        nyquist = complex(*data["nyquist"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed DFT JSON: {exc}") from exc
    return GraphDFT(zero, tuple(blocks), nyquist)
