"""Eigenfunctions of the standard Laplacian on an equilateral metric graph.

On every edge an eigenfunction with frequency ``omega > 0`` is stored as
``A_e exp(i omega x) + B_e exp(-i omega x)`` in the canonical orientation;
at ``omega == 0`` the pair means ``A_e + B_e x``.

Frequencies in ``(0, 2 pi]`` are *primitive*.  Off ``{pi, 2 pi}`` they come
from eigenvalues ``mu`` of ``I - T^{-1}A`` via ``cos(omega) = 1 - mu``
(both arccos branches); at ``pi`` and ``2 pi`` they are built from the
flow space, the cycle space and the cosine function.  Every other
frequency is a primitive one shifted by a multiple of ``2 pi``.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import bipartition, spanning_tree_cycles, validate
from .linalg import gram_schmidt
from .spectrum import eigensolve_delta1

TWO_PI = 2.0 * math.pi
_SIN = np.array([1 / 2j, -1 / 2j])  # sin(w x) = (e^{iwx} - e^{-iwx}) / 2i
_COS = np.array([0.5, 0.5], dtype=complex)


@dataclass(frozen=True, eq=False)
class EdgeWaveFunction:
    """Per-edge exponential pair at a common frequency.

    ``coeffs`` has shape ``(E, 2)`` with columns ``(A_e, B_e)``.  The local
    coordinate on each edge runs over ``[0, edge_length]``.
    """

    omega: float
    coeffs: np.ndarray
    edge_length: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=np.complex128))
        object.__setattr__(self, "omega", float(self.omega))

    @property
    def edge_count(self):
        return self.coeffs.shape[0]

    def evaluate(self, x):
        """Values at local positions ``x`` on every edge; shape ``(E, len(x))``."""
        x = np.asarray(x, dtype=float)
        a, b = self.coeffs[:, :1], self.coeffs[:, 1:]
        if self.omega == 0.0:
            return a + b * x
        ph = np.exp(1j * self.omega * x)
        return a * ph + b * ph.conj()

    def endpoint_values(self):
        """Columns: value at the tail, value at the head."""
        return self.evaluate([0.0, self.edge_length])

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        a, b = self.coeffs[:, :1], self.coeffs[:, 1:]
        if self.omega == 0.0:
            return np.broadcast_to(b, (self.edge_count, x.size)).astype(complex)
        ph = np.exp(1j * self.omega * x)
        return 1j * self.omega * (a * ph - b * ph.conj())

    def outward_derivatives(self):
        """Derivative pointing into the edge, at the tail and at the head."""
        d = self.derivative([0.0, self.edge_length])
        return np.stack([d[:, 0], -d[:, 1]], axis=1)

    @property
    def eigenvalue(self):
        return self.omega ** 2


def vertex_values(psi, graph):
    """Vertex values read from the lowest-index incident edge."""
    ends = psi.endpoint_values()
    out = np.empty(graph.vertex_count, dtype=complex)
    for v, inc in enumerate(graph.incident_edges):
        e = inc[0]
        out[v] = ends[e, 0] if graph.edges[e][0] == v else ends[e, 1]
    return out


def vertex_condition_residuals(psi, graph):
    """``(continuity, kirchhoff)`` maximal defects over all vertices.

    The Kirchhoff defect is divided by ``max(1, omega)``.
    """
    ends = psi.endpoint_values()
    vals = vertex_values(psi, graph)
    cont = max(
        float(np.max(np.abs(ends[:, 0] - vals[graph.tails]), initial=0.0)),
        float(np.max(np.abs(ends[:, 1] - vals[graph.heads]), initial=0.0)),
    )
    d = psi.outward_derivatives()
    total = np.zeros(graph.vertex_count, dtype=complex)
    np.add.at(total, graph.tails, d[:, 0])
    np.add.at(total, graph.heads, d[:, 1])
    kirch = float(np.max(np.abs(total))) / max(1.0, psi.omega)
    return cont, kirch


def vertex_relation_residual(psi, graph):
    """Max over vertices of ``|cos(omega) y(v) - mean of y over neighbours|``."""
    y = vertex_values(psi, graph)
    means = graph.adjacency_matrix() @ y / graph.degrees
    return float(np.max(np.abs(math.cos(psi.omega) * y - means)))


# --- lifting and shifting ---------------------------------------------------

def lift(graph, vertex_values, mu, branch="low", tol=1e-8):
    """Extend an eigenvector of ``I - T^{-1}A`` to an eigenfunction on the edges.

    Parameters
    ----------
    graph : Graph
    vertex_values : array_like
        Satisfies ``T^{-1}A y = (1 - mu) y``.
    mu : float
        Eigenvalue strictly inside ``(0, 2)``.
    branch : {"low", "high"}
        ``omega = arccos(1 - mu)`` or ``2 pi - arccos(1 - mu)``.

    Returns
    -------
    EdgeWaveFunction
    """
    if not 0.0 < mu < 2.0:
        raise ValueError(f"mu must lie strictly inside (0, 2), got {mu}")
    if branch not in ("low", "high"):
        raise ValueError(f"branch must be 'low' or 'high', got {branch!r}")
    y = np.asarray(vertex_values, dtype=complex)
    if y.shape != (graph.vertex_count,):
        raise ValueError("vertex_values length does not match the graph")
    resid = graph.adjacency_matrix() @ y / graph.degrees - (1.0 - mu) * y
    scale = max(1.0, float(np.max(np.abs(y), initial=0.0)))
    if np.max(np.abs(resid), initial=0.0) > tol * scale:
        raise ValueError("vertex_values is not an eigenvector for this mu")
    omega = math.acos(1.0 - mu)
    if branch == "high":
        omega = TWO_PI - omega
    y0, y1 = y[graph.tails], y[graph.heads]
    c, s = math.cos(omega), math.sin(omega)
    # y(x) = y0 cos(wx) + [(y1 - y0 cos w) / sin w] sin(wx)
    slope = (y1 - y0 * c) / s
    coeffs = np.stack([0.5 * y0 + slope / 2j, 0.5 * y0 - slope / 2j], axis=1)
    return EdgeWaveFunction(omega, coeffs)


def shift(psi, m):
    """Same coefficients at frequency ``omega + 2 pi m``; vertex values are unchanged."""
    if m < 0 or int(m) != m:
        raise ValueError("m must be a non-negative integer")
    if not 0.0 < psi.omega <= TWO_PI + 1e-12:
        raise ValueError("shift expects a primitive frequency in (0, 2 pi]")
    return EdgeWaveFunction(psi.omega + TWO_PI * m, psi.coeffs, psi.edge_length)


def rescale(psi, L):
    """Transplant to edges of length ``L``.

    Returns the rescaled function and its eigenvalue ``lambda / L^2``.
    """
    if not L > 0:
        raise ValueError("edge length must be positive")
    length = psi.edge_length * L
    if psi.omega == 0.0:
        coeffs = psi.coeffs.copy()
        coeffs[:, 1] /= L
        new = EdgeWaveFunction(0.0, coeffs, length)
    else:
        new = EdgeWaveFunction(psi.omega / L, psi.coeffs, length)
    return new, new.omega ** 2


# --- combinatorial eigenspaces at multiples of pi -----------------------------

@dataclass(frozen=True, eq=False)
class FlowBasis:
    """Integer rows spanning ``{f : sum of f over the edges at v = 0 for every v}``."""

    vectors: np.ndarray

    def __len__(self):
        return self.vectors.shape[0]


def rational_nullspace(matrix):
    """Null space basis of an integer matrix by exact elimination.

    Returns integer row vectors, one per free column in ascending order,
    with denominators cleared, content removed and the first nonzero entry
    positive.
    """
    rows = [[Fraction(int(x)) for x in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        denom = math.lcm(*(x.denominator for x in vec))
        ints = [int(x * denom) for x in vec]
        g = math.gcd(*ints)
        lead = next(x for x in ints if x)
        basis.append([x // g if lead > 0 else -x // g for x in ints])
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


def flow_space(graph):
    """Integral basis of the null space of the unsigned incidence matrix."""
    validate(graph)
    return FlowBasis(rational_nullspace(graph.incidence_matrix()))


def cycle_eigenspace(graph, n):
    """Eigenfunctions at ``2 n pi``: ``+-sin(2 n pi x)`` around each fundamental cycle."""
    if n < 1:
        raise ValueError("n must be positive")
    basis = spanning_tree_cycles(graph)
    return [
        EdgeWaveFunction(TWO_PI * n, row[:, None] * _SIN[None, :])
        for row in basis.signed_incidence
    ]


def odd_eigenspace(graph, n):
    """Eigenfunctions at ``(2n - 1) pi``: ``f(e) sin((2n - 1) pi x)`` for each flow ``f``."""
    if n < 1:
        raise ValueError("n must be positive")
    flows = flow_space(graph)
    return [
        EdgeWaveFunction((2 * n - 1) * math.pi, row[:, None] * _SIN[None, :])
        for row in flows.vectors
    ]


def cosine_eigenfunction(graph, n):
    """``cos(n pi x)`` on every edge, or ``None`` when ``n`` is odd and the graph is not bipartite.

    For odd ``n`` the sign is chosen so that the function equals +1 on
    colour class 0 and -1 on class 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    signs = np.ones(graph.edge_count)
    if n % 2:
        classes = bipartition(graph)
        if classes is None:
            return None
        signs = np.where(classes[graph.tails] == 0, 1.0, -1.0)
    return EdgeWaveFunction(n * math.pi, signs[:, None] * _COS[None, :])


# --- continuous inner product -------------------------------------------------

def _moments(theta, p):
    """``int_0^1 x^p exp(i theta x) dx`` for ``p`` in {0, 1, 2}, elementwise in ``theta``."""
    theta = np.asarray(theta, dtype=float)
    out = np.empty(theta.shape, dtype=complex)
    small = np.abs(theta) < 1.0
    if np.any(small):
        t = 1j * theta[small]
        acc = np.zeros(t.shape, dtype=complex)
        term = np.ones(t.shape, dtype=complex)
        for k in range(30):
            acc += term / (p + k + 1)
            term = term * t / (k + 1)
        out[small] = acc
    big = ~small
    if np.any(big):
        it = 1j * theta[big]
        e = np.exp(it)
        j = (e - 1.0) / it
        for q in range(1, p + 1):
            j = e / it - q * j / it
        out[big] = j
    return out


def exp_moment(theta):
    """``int_0^1 exp(i theta x) dx``."""
    out = _moments(theta, 0)
    return complex(out) if out.ndim == 0 else out


def _terms(psi):
    """Edge function as a list of ``(coeff (E,), power, frequency)`` terms."""
    a, b = psi.coeffs[:, 0], psi.coeffs[:, 1]
    if psi.omega == 0.0:
        return [(a, 0, 0.0), (b, 1, 0.0)]
    return [(a, 0, psi.omega), (b, 0, -psi.omega)]


def continuous_inner_product(f, g):
    """``(1/|E|) * integral over the graph of f conj(g)``, in closed form."""
    if f.edge_count != g.edge_count:
        raise ValueError("functions live on different graphs")
    if f.edge_length != 1.0 or g.edge_length != 1.0:
        raise ValueError("inner product is defined for unit edge length")
    total = 0j
    for cf, pf, wf in _terms(f):
        for cg, pg, wg in _terms(g):
            if not (np.any(cf) and np.any(cg)):
                continue
            total += np.sum(cf * cg.conj()) * complex(_moments(wf - wg, pf + pg))
    return total / f.edge_count


def block_gram(coeffs, omega):
    """Continuous Gram matrix ``G[j, p] = <psi_j, psi_p>`` of same-frequency functions.

    ``coeffs`` has shape ``(I, E, 2)``.
    """
    ne = coeffs.shape[1]
    a, b = coeffs[:, :, 0], coeffs[:, :, 1]
    cross = exp_moment(2.0 * omega)
    g = a @ a.conj().T + b @ b.conj().T
    g = g + cross * (a @ b.conj().T) + np.conj(cross) * (b @ a.conj().T)
    return g / ne


# --- primitive spectrum -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PrimitiveBlock:
    """Orthonormal basis of one primitive eigenspace; ``coeffs`` is ``(I, E, 2)``."""

    omega: float
    coeffs: np.ndarray
    kind: str

    @property
    def dim(self):
        return self.coeffs.shape[0]

    @property
    def functions(self):
        return [EdgeWaveFunction(self.omega, c) for c in self.coeffs]

    @property
    def special(self):
        return self.kind in ("pi", "2pi")


@dataclass(frozen=True, eq=False)
class PrimitiveSpectrum:
    graph: object
    blocks: tuple
    zero_mode: EdgeWaveFunction

    @property
    def frequencies(self):
        return tuple(b.omega for b in self.blocks)

    @property
    def dims(self):
        return tuple(b.dim for b in self.blocks)

    def to_json(self):
        return [
            {
                "omega": b.omega,
                "functions": [
                    {"edge_coeffs": [[[z.real, z.imag] for z in pair] for pair in f]}
                    for f in b.coeffs
                ],
            }
            for b in self.blocks
        ]


def orthonormalize(functions, rtol=1e-10):
    """Modified Gram-Schmidt (with reorthogonalisation) in the continuous inner product."""
    coeffs = np.stack([f.coeffs for f in functions])
    omega = functions[0].omega
    b = gram_schmidt(block_gram(coeffs, omega), rtol=rtol)
    return np.einsum("ij,jep->iep", b, coeffs)


def primitive_spectrum(graph, spectrum=None, mu_tol=1e-8):
    """Orthonormal bases of every eigenspace with frequency in ``(0, 2 pi]``."""
    validate(graph)
    if spectrum is None:
        spectrum = eigensolve_delta1(graph)
    raw = []
    for mu, vecs in zip(spectrum.mu, spectrum.vectors):
        if mu <= mu_tol or mu >= 2.0 - mu_tol:
            continue
        for branch in ("low", "high"):
            funcs = [lift(graph, v, mu, branch) for v in vecs.T]
            raw.append((funcs[0].omega, funcs, "lift"))
    at_pi = odd_eigenspace(graph, 1)
    cos_pi = cosine_eigenfunction(graph, 1)
    if cos_pi is not None:
        at_pi.append(cos_pi)
    if at_pi:
        raw.append((math.pi, at_pi, "pi"))
    raw.append((TWO_PI, cycle_eigenspace(graph, 1) + [cosine_eigenfunction(graph, 2)], "2pi"))
    raw.sort(key=lambda item: item[0])
    blocks = tuple(PrimitiveBlock(w, orthonormalize(funcs), kind) for w, funcs, kind in raw)
    zero = EdgeWaveFunction(0.0, np.tile([1.0, 0.0], (graph.edge_count, 1)))
    return PrimitiveSpectrum(graph, blocks, zero)
