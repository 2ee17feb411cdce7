"""Combinatorial graphs with unit edge lengths and their refinements.

Every edge ``(tail, head)`` has ``tail < head`` and carries the local
coordinate ``x in [0, 1]`` with ``x = 0`` at the tail.  The refinement
``G_N`` adds the interior samples ``x_n = n / N`` (``n = 1..N-1``) on each
edge; its vertices are ordered as the original vertices ``0..V-1``
followed, edge by edge in list order, by the interior samples from tail to
head.
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class GraphValidationError(ValueError):
    """Raised when a graph violates one of the standing assumptions."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


@dataclass(frozen=True)
class Violation:
    invariant: str
    message: str
    vertices: tuple = ()
    edges: tuple = ()

    def __str__(self):
        parts = [f"{self.invariant}: {self.message}"]
        if self.vertices:
            parts.append(f"vertices={list(self.vertices)}")
        if self.edges:
            parts.append(f"edges={[list(e) for e in self.edges]}")
        return " ".join(parts)


@dataclass(frozen=True, eq=False)
class Graph:
    vertex_count: int
    edges: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    @property
    def edge_count(self):
        return len(self.edges)

    @cached_property
    def tails(self):
        return np.array([u for u, _ in self.edges], dtype=np.intp)

    @cached_property
    def heads(self):
        return np.array([v for _, v in self.edges], dtype=np.intp)

    @cached_property
    def degrees(self):
        deg = np.zeros(self.vertex_count, dtype=np.intp)
        np.add.at(deg, self.tails, 1)
        np.add.at(deg, self.heads, 1)
        return deg

    @cached_property
    def neighbors(self):
        """Sorted neighbour lists, one per vertex."""
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self):
        """Per vertex, the indices of incident edges in ascending order."""
        inc = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(i) for i in inc)

    @cached_property
    def edge_index(self):
        return {edge: e for e, edge in enumerate(self.edges)}

    def adjacency_matrix(self):
        a = np.zeros((self.vertex_count, self.vertex_count))
        a[self.tails, self.heads] = 1.0
        a[self.heads, self.tails] = 1.0
        return a

    def incidence_matrix(self):
        """Unsigned vertex-edge incidence matrix (integer entries)."""
        b = np.zeros((self.vertex_count, self.edge_count), dtype=np.int64)
        e = np.arange(self.edge_count)
        b[self.tails, e] = 1
        b[self.heads, e] = 1
        return b

    def refined_size(self, N):
        return self.vertex_count + (N - 1) * self.edge_count

    def refined_degrees(self, N):
        deg = np.full(self.refined_size(N), 2.0)
        deg[: self.vertex_count] = self.degrees
        return deg

    def to_json(self):
        return {
            "name": self.name,
            "vertex_count": self.vertex_count,
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                vertex_count=int(data["vertex_count"]),
                edges=tuple(tuple(e) for e in data["edges"]),
                name=str(data.get("name", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc


def find_violation(graph):
    """Return the first violated standing assumption, or ``None``."""
    nv = graph.vertex_count
    if nv < 1:
        return Violation("vertex_count", "graph needs at least one vertex")
    seen = set()
    for e, (u, v) in enumerate(graph.edges):
        if not (0 <= u < nv and 0 <= v < nv):
            return Violation("index", f"edge {e} references a missing vertex", edges=((u, v),))
        if u == v:
            return Violation("simple", f"edge {e} is a loop", vertices=(u,), edges=((u, v),))
        if u > v:
            return Violation("orientation", f"edge {e} has tail > head", edges=((u, v),))
        if (u, v) in seen:
            return Violation("simple", f"edge {e} is a duplicate", edges=((u, v),))
        seen.add((u, v))
    reached = _bfs_order(graph, 0)
    if len(reached) < nv:
        missing = tuple(sorted(set(range(nv)) - set(reached)))
        return Violation("connected", "not connected", vertices=missing)
    low = tuple(int(v) for v in np.flatnonzero(graph.degrees < 2))
    if low:
        return Violation("min_degree", "degree < 2", vertices=low)
    return None


def validate(graph):
    """Raise :class:`GraphValidationError` unless ``graph`` is admissible."""
    violation = find_violation(graph)
    if violation is not None:
        raise GraphValidationError(violation)
    return graph


def _bfs_order(graph, root):
    order, parent = _bfs_tree(graph, root)
    return order


def _bfs_tree(graph, root):
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in graph.neighbors[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


@dataclass(frozen=True, eq=False)
class CycleBasis:
    """Fundamental cycles of a BFS spanning tree.

    ``cycles[j]`` is a closed vertex walk (first vertex repeated at the
    end) that starts by traversing ``tree_complement[j]`` from tail to
    head; ``signed_incidence[j, e]`` is +1/-1 when the walk traverses edge
    ``e`` along/against its orientation.
    """

    cycles: tuple
    signed_incidence: np.ndarray
    tree_complement: tuple = field(default=())

    def __len__(self):
        return len(self.cycles)


def spanning_tree_cycles(graph):
    """Fundamental cycle basis from the BFS tree rooted at vertex 0."""
    _, parent = _bfs_tree(graph, 0)
    tree = {tuple(sorted((v, p))) for v, p in parent.items() if p is not None}
    depth = {}
    for v in _bfs_order(graph, 0):
        depth[v] = 0 if parent[v] is None else depth[parent[v]] + 1

    cycles, rows, chords = [], [], []
    for e, (u, v) in enumerate(graph.edges):
        if (u, v) in tree:
            continue
        # tree path v -> ... -> u, closing the walk u -> v -> ... -> u
        up_v, up_u = [v], [u]
        a, b = v, u
        while depth[a] > depth[b]:
            a = parent[a]
            up_v.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            up_u.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            up_v.append(a)
            up_u.append(b)
        walk = [u] + up_v + up_u[-2::-1]
        row = np.zeros(graph.edge_count, dtype=np.int64)
        for s, t in zip(walk[:-1], walk[1:]):
            if s < t:
                row[graph.edge_index[(s, t)]] += 1
            else:
                row[graph.edge_index[(t, s)]] -= 1
        cycles.append(tuple(walk))
        rows.append(row)
        chords.append(e)
    inc = np.array(rows, dtype=np.int64).reshape(len(rows), graph.edge_count)
    return CycleBasis(tuple(cycles), inc, tuple(chords))


def bipartition(graph):
    """Two-colouring with ``classes[0] == 0``, or ``None`` if not bipartite."""
    order, parent = _bfs_tree(graph, 0)
    classes = np.zeros(graph.vertex_count, dtype=np.int64)
    for v in order[1:]:
        classes[v] = 1 - classes[parent[v]]
    if np.any(classes[graph.tails] == classes[graph.heads]):
        return None
    return classes


def odd_closed_walk(graph):
    """An odd cycle witnessing non-bipartiteness, or ``None``."""
    order, parent = _bfs_tree(graph, 0)
    classes = {0: 0}
    for v in order[1:]:
        classes[v] = 1 - classes[parent[v]]
    for u, v in graph.edges:
        if classes[u] == classes[v]:
            path_u, path_v = [u], [v]
            while path_u[-1] != path_v[-1]:
                # both endpoints share a class, so they sit at equal BFS depth
                path_u.append(parent[path_u[-1]])
                path_v.append(parent[path_v[-1]])
            return tuple(path_u + path_v[-2::-1] + [u])
    return None


def vertex_inner_product(f, g, graph, N):
    """Degree-weighted inner product on the vertex space of ``G_N``.

    ``<f, g>_N = (1/W) sum_v deg(v) f(v) conj(g(v))`` with ``W = 2 N |E|``.
    """
    f = np.asarray(getattr(f, "values", f))
    g = np.asarray(getattr(g, "values", g))
    size = graph.refined_size(N)
    if f.shape != (size,) or g.shape != (size,):
        raise ValueError(f"expected signals of length {size}, got {f.shape} and {g.shape}")
    w = graph.refined_degrees(N)
    return complex(np.sum(w * f * np.conj(g)) / (2 * N * graph.edge_count))


# --- generators -------------------------------------------------------------

def complete_bipartite(m, n=2):
    """``K(m, n)``: the ``n`` vertices of degree ``m`` come first."""
    if min(m, n) < 2 or max(m, n) < 3:
        raise ValueError("K(m, n) needs m, n >= 2 and max(m, n) >= 3")
    edges = [(r, n + b) for r in range(n) for b in range(m)]
    return Graph(m + n, tuple(edges), name=f"K({m},{n})")


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(edges), name=f"C{n}")


def bowtie():
    """Two triangles joined by the bridge edge (2, 3)."""
    edges = ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5))
    return Graph(6, edges, name="bowtie")


# --- signals on the refinement ----------------------------------------------

@dataclass(frozen=True, eq=False)
class VertexSignal:
    """Complex values on the vertices of ``G_N`` in canonical order."""

    N: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.complex128))

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __len__(self):
        return len(self.values)

    def to_json(self):
        return {"N": int(self.N), "values": [[float(z.real), float(z.imag)] for z in self.values]}

    @classmethod
    def from_json(cls, data):
        try:
            vals = np.array([complex(re, im) for re, im in data["values"]])
            return cls(int(data["N"]), vals)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed signal JSON: {exc}") from exc


def signal_values(f, graph, N):
    """Values of ``f`` (signal or array) after checking the length for ``G_N``."""
    if isinstance(f, VertexSignal) and f.N != N:
        raise ValueError(f"signal is sampled at N={f.N}, expected N={N}")
    values = np.asarray(getattr(f, "values", f), dtype=np.complex128)
    size = graph.refined_size(N)
    if values.shape != (size,):
        raise ValueError(f"expected {size} values for N={N}, got shape {values.shape}")
    return values


def edge_samples(values, graph, N):
    """Reshape a ``G_N`` signal into per-edge samples ``f_e(x_0), ..., f_e(x_N)``."""
    nv, ne = graph.vertex_count, graph.edge_count
    out = np.empty((ne, N + 1), dtype=np.result_type(values, np.complex128))
    out[:, 0] = values[graph.tails]
    out[:, N] = values[graph.heads]
    out[:, 1:N] = values[nv:].reshape(ne, N - 1)
    return out


def first_incident_endpoint(graph):
    """For each vertex, ``(edge, column)`` of its lowest-index incident edge."""
    edges = np.array([inc[0] for inc in graph.incident_edges], dtype=np.intp)
    cols = np.where(graph.tails[edges] == np.arange(graph.vertex_count), 0, -1)
    return edges, cols


def assemble_signal(samples, graph, tol=None):
    """Inverse of :func:`edge_samples`.

    Original-vertex values come from the lowest-index incident edge.  If
    ``tol`` is given, every incident edge must agree to within ``tol``
    times the largest sample magnitude.
    """
    ne, n1 = samples.shape
    N = n1 - 1
    nv = graph.vertex_count
    values = np.empty(graph.refined_size(N), dtype=samples.dtype)
    edges, cols = first_incident_endpoint(graph)
    values[:nv] = samples[edges, cols]
    values[nv:] = samples[:, 1:N].reshape(-1)
    if tol is not None:
        spread = max(
            np.max(np.abs(samples[:, 0] - values[graph.tails])),
            np.max(np.abs(samples[:, N] - values[graph.heads])),
        )
        scale = max(1.0, float(np.max(np.abs(samples))))
        if spread > tol * scale:
            raise ArithmeticError(f"endpoint values disagree by {spread:.3e} between incident edges")
    return VertexSignal(N, values)
