"""Invariant checks run by ``qgfft verify``."""
import math
from dataclasses import dataclass

import numpy as np

from .eigenbasis import (
    block_gram,
    cosine_eigenfunction,
    flow_space,
    primitive_spectrum,
    shift,
    vertex_condition_residuals,
    vertex_relation_residual,
    vertex_values,
)
from .graph import bipartition, spanning_tree_cycles, validate, vertex_inner_product
from .oracle import naive_forward, naive_inverse
from .sampling import inner_product_error, restrict
from .spectrum import apply_delta_N, eigensolve_delta1
from .transform import build_basis, fft_forward, fft_inverse, parseval_norm

ORACLE_MAX_N = 32


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: float
    tolerance: float

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "measured": self.measured,
            "tolerance": self.tolerance,
        }


def _check(name, measured, tol, tol_override):
    tol = tol if tol_override is None else tol_override
    measured = float(measured)
    return Check(name, bool(measured <= tol), measured, tol)


def run_checks(graph, N, tolerance=None, seed=0, signals=3):
    """Run every invariant at size ``N``; ``tolerance`` replaces all default tolerances."""
    validate(graph)
    rng = np.random.default_rng(seed)
    nv, ne = graph.vertex_count, graph.edge_count
    out = []
    add = lambda name, measured, tol: out.append(_check(name, measured, tol, tolerance))  # noqa: E731

    cycles = spanning_tree_cycles(graph)
    signed = graph.incidence_matrix() * np.where(
        np.arange(nv)[:, None] == graph.tails[None, :], -1, 1)
    add("cycle count = E - V + 1", abs(len(cycles) - (ne - nv + 1)), 0)
    add("cycle boundaries vanish", np.abs(signed @ cycles.signed_incidence.T).max(initial=0), 0)
    classes = bipartition(graph)
    if classes is not None:
        add("bipartition proper", np.sum(classes[graph.tails] == classes[graph.heads]), 0)
    flows = flow_space(graph)
    add("flow space vertex sums", np.abs(graph.incidence_matrix() @ flows.vectors.T).max(initial=0), 0)
    rank = np.linalg.matrix_rank(flows.vectors) if len(flows) else 0
    add("flow space independence", len(flows) - rank, 0)

    spec = eigensolve_delta1(graph)
    add("discrete multiplicities sum to V", abs(sum(spec.multiplicity) - nv), 0)
    norm_adj = graph.adjacency_matrix() / graph.degrees[:, None]
    resid = max(np.abs(v - norm_adj @ v - mu * v).max() for mu, v in zip(spec.mu, spec.vectors))
    add("discrete eigen residual", resid, 1e-10)
    vecs = np.hstack(spec.vectors)
    weights = graph.degrees / (2.0 * ne)
    add("discrete eigenvectors orthonormal", np.abs((vecs.T * weights) @ vecs - np.eye(nv)).max(), 1e-10)
    add("mu = 2 iff bipartite", int((2.0 in spec.mu) != (classes is not None)), 0)

    prim = primitive_spectrum(graph, spec)
    add("primitive dimensions sum to 2E", abs(sum(prim.dims) - 2 * ne), 0)
    ortho = cont = kirch = relation = dichotomy = 0.0
    for blk in prim.blocks:
        ortho = max(ortho, np.abs(block_gram(blk.coeffs, blk.omega) - np.eye(blk.dim)).max())
        for psi in blk.functions:
            c, k = vertex_condition_residuals(psi, graph)
            cont, kirch = max(cont, c), max(kirch, k)
            if blk.special:
                # vertex values vanish everywhere or nowhere
                y = np.abs(vertex_values(psi, graph))
                if y.max() > 1e-8 and y.min() <= 1e-8:
                    dichotomy += 1
            else:
                relation = max(relation, vertex_relation_residual(psi, graph))
        shifted = shift(blk.functions[0], 3)
        kirch = max(kirch, vertex_condition_residuals(shifted, graph)[1])
    add("primitive blocks orthonormal", ortho, 1e-10)
    add("continuity at vertices", cont, 1e-10)
    add("Kirchhoff condition", kirch, 1e-9)
    add("vertex relation cos(w) y(v) = mean y(u)", relation, 1e-9)
    add("vanishing dichotomy at pi, 2pi", dichotomy, 0)

    basis = build_basis(graph, N, prim)
    add("completeness", abs(basis.dimension - graph.refined_size(N)), 0)
    special = 0.0
    for k, blk in enumerate(basis.blocks):
        if not blk.special:
            continue
        for m in sorted({0, basis.shifts[k] - 1} & set(range(basis.shifts[k]))):
            phis = [restrict(shift(p, m), graph, N) for p in blk.functions]
            g = np.array([[vertex_inner_product(a, b, graph, N) for b in phis] for a in phis])
            special = max(special, np.abs(g - np.eye(blk.dim)).max())
    add("restricted pi/2pi blocks orthonormal", special, 1e-9)
    cos_n = cosine_eigenfunction(graph, N)
    disc, cont_ip, _ = inner_product_error(cos_n, cos_n, graph, N)
    add("Nyquist block: discrete = 2 x continuous", abs(disc - 2.0 * cont_ip), 1e-10)

    size = graph.refined_size(N)
    round_trip = parseval = eig = selfadj = linear = 0.0
    lam0, lam_blocks, lam_nyq = basis.eigenvalues()
    for _ in range(signals):
        f = rng.normal(size=size) + 1j * rng.normal(size=size)
        g = rng.normal(size=size) + 1j * rng.normal(size=size)
        dft = fft_forward(f, basis)
        back = fft_inverse(dft, basis).values
        fnorm = math.sqrt(vertex_inner_product(f, f, graph, N).real)
        round_trip = max(round_trip, np.linalg.norm(back - f) / np.linalg.norm(f))
        parseval = max(parseval, abs(parseval_norm(dft, basis) - fnorm ** 2))
        ddft = fft_forward(apply_delta_N(f, graph, N), basis)
        diff = np.concatenate([
            [ddft.zero - lam0 * dft.zero, ddft.nyquist - lam_nyq * dft.nyquist],
            *[(a - lam[:, None] * b).ravel() for a, b, lam in zip(ddft.blocks, dft.blocks, lam_blocks)],
        ])
        eig = max(eig, np.linalg.norm(diff) / np.linalg.norm(dft.flat()))
        lhs = vertex_inner_product(apply_delta_N(f, graph, N), g, graph, N)
        rhs = vertex_inner_product(f, apply_delta_N(g, graph, N), graph, N)
        selfadj = max(selfadj, abs(lhs - rhs))
        combo = fft_forward(2.0 * f - 3j * g, basis).flat()
        linear = max(linear, np.abs(combo - (2.0 * dft.flat() - 3j * fft_forward(g, basis).flat())).max())
    add("round trip ||ifft(fft f) - f|| / ||f||", round_trip, 1e-8)
    add("Parseval", parseval, 1e-8)
    add("eigen-relation F(Delta_N f) = mu F(f)", eig, 1e-8)
    add("Delta_N self-adjoint", selfadj, 1e-10)
    add("linearity", linear, 1e-10)

    if N <= ORACLE_MAX_N:
        f = rng.normal(size=size) + 1j * rng.normal(size=size)
        dft = fft_forward(f, basis)
        add("fft_forward vs naive_forward", np.abs(dft.flat() - naive_forward(f, basis).flat()).max(), 1e-9)
        add("fft_inverse vs naive_inverse",
            np.abs(fft_inverse(dft, basis).values - naive_inverse(dft, basis)).max(), 1e-9)
    return out
