import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgfft.graph import (
    Graph,
    GraphValidationError,
    VertexSignal,
    assemble_signal,
    bipartition,
    bowtie,
    complete_bipartite,
    cycle_graph,
    edge_samples,
    find_violation,
    odd_closed_walk,
    spanning_tree_cycles,
    validate,
    vertex_inner_product,
)

from conftest import GRAPHS, random_signal


def to_nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    return g


def boundary(graph):
    """Signed vertex-edge incidence: -1 at the tail, +1 at the head."""
    d = np.zeros((graph.vertex_count, graph.edge_count), dtype=np.int64)
    for e, (u, v) in enumerate(graph.edges):
        d[u, e] -= 1
        d[v, e] += 1
    return d


# --- validation ---------------------------------------------------------------

def test_triangle_is_valid():
    assert validate(cycle_graph(3)) is not None
    assert find_violation(cycle_graph(3)) is None


def test_disconnected_graph_rejected():
    two = Graph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
    with pytest.raises(GraphValidationError) as info:
        validate(two)
    assert info.value.violation.invariant == "connected"
    assert "not connected" in str(info.value)
    assert set(info.value.violation.vertices) == {3, 4, 5}


def test_path_rejected_for_low_degree():
    with pytest.raises(GraphValidationError) as info:
        validate(Graph(3, ((0, 1), (1, 2))))
    assert info.value.violation.invariant == "min_degree"
    assert info.value.violation.vertices == (0, 2)


@pytest.mark.parametrize(
    "edges, invariant",
    [
        (((0, 1), (1, 2), (0, 2), (0, 2)), "simple"),
        (((0, 1), (1, 1), (0, 2), (1, 2)), "simple"),
        (((0, 1), (2, 1), (0, 2)), "orientation"),
        (((0, 1), (1, 5), (0, 2)), "index"),
    ],
)
def test_structural_violations(edges, invariant):
    assert find_violation(Graph(3, edges)).invariant == invariant


def test_validation_error_is_value_error():
    assert issubclass(GraphValidationError, ValueError)


# --- generators and JSON -------------------------------------------------------

def test_generators():
    k = complete_bipartite(4, 2)
    assert (k.vertex_count, k.edge_count) == (6, 8)
    assert list(k.degrees) == [4, 4, 2, 2, 2, 2]
    b = bowtie()
    assert (b.vertex_count, b.edge_count) == (6, 7)
    assert cycle_graph(3).edges == ((0, 1), (1, 2), (0, 2))
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        complete_bipartite(2, 2)


def test_graph_json_round_trip(graph):
    text = json.dumps(graph.to_json())
    back = Graph.from_json(json.loads(text))
    assert back == graph and back.name == graph.name


def test_graph_json_malformed():
    with pytest.raises(ValueError):
        Graph.from_json({"edges": [[0, 1]]})


def test_refined_size_and_degrees():
    k = complete_bipartite(4, 2)
    assert k.refined_size(8) == 62
    deg = k.refined_degrees(8)
    assert deg.sum() == 2 * 8 * k.edge_count


# --- cycles ---------------------------------------------------------------------

@pytest.mark.parametrize("name, count", [("K42", 3), ("C3", 1), ("C4", 1), ("bowtie", 2)])
def test_cycle_counts(name, count):
    graph = GRAPHS[name]
    cb = spanning_tree_cycles(graph)
    assert len(cb) == count == graph.edge_count - graph.vertex_count + 1
    # independent oracle: networkx cycle basis and the rank of the signed incidence
    assert len(nx.cycle_basis(to_nx(graph))) == count
    assert np.linalg.matrix_rank(cb.signed_incidence) == count


def test_cycles_are_closed_and_own_their_chord(graph):
    cb = spanning_tree_cycles(graph)
    assert np.all(boundary(graph) @ cb.signed_incidence.T == 0)
    for j, (walk, chord) in enumerate(zip(cb.cycles, cb.tree_complement)):
        assert walk[0] == walk[-1]
        assert cb.signed_incidence[j, chord] == 1
        others = np.delete(cb.signed_incidence[:, chord], j)
        assert np.all(others == 0)


def test_bowtie_cycles_deterministic():
    cb = spanning_tree_cycles(bowtie())
    assert cb.cycles == ((1, 2, 0, 1), (4, 5, 3, 4))


# --- bipartition ------------------------------------------------------------------

def test_bipartition_examples():
    k = bipartition(complete_bipartite(4, 2))
    assert list(k) == [0, 0, 1, 1, 1, 1]
    assert bipartition(cycle_graph(3)) is None
    assert list(bipartition(cycle_graph(4))) == [0, 1, 0, 1]


def test_bipartition_matches_networkx(graph):
    classes = bipartition(graph)
    assert (classes is not None) == nx.is_bipartite(to_nx(graph))
    if classes is None:
        walk = odd_closed_walk(graph)
        assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1
        for a, b in zip(walk[:-1], walk[1:]):
            assert (min(a, b), max(a, b)) in graph.edge_index
    else:
        assert classes[0] == 0
        assert not np.any(classes[graph.tails] == classes[graph.heads])
        assert odd_closed_walk(graph) is None


# --- inner product ------------------------------------------------------------------

def test_constant_has_unit_norm(graph):
    one = np.ones(graph.refined_size(4))
    assert vertex_inner_product(one, one, graph, 4) == pytest.approx(1.0, abs=1e-15)


def test_inner_product_matches_direct_sum(rng):
    graph, N = complete_bipartite(4, 2), 4
    f = random_signal(rng, graph.refined_size(N))
    g = random_signal(rng, graph.refined_size(N))
    # brute-force G_N degrees by building the refinement explicitly
    refined = nx.Graph()
    nv = graph.vertex_count
    for e, (u, v) in enumerate(graph.edges):
        chain = [u] + [nv + e * (N - 1) + i for i in range(N - 1)] + [v]
        refined.add_edges_from(zip(chain[:-1], chain[1:]))
    total = 0j
    for vtx in reversed(range(graph.refined_size(N))):
        total += refined.degree[vtx] * f[vtx] * np.conj(g[vtx])
    total /= 2 * N * graph.edge_count
    assert abs(vertex_inner_product(f, g, graph, N) - total) < 1e-13


def test_inner_product_rejects_length_mismatch():
    with pytest.raises(ValueError):
        vertex_inner_product(np.ones(5), np.ones(5), cycle_graph(3), 2)


vectors = st.integers(min_value=0, max_value=2**32 - 1)


@given(seed=vectors, name=st.sampled_from(sorted(GRAPHS)), N=st.sampled_from([2, 4, 8]))
def test_inner_product_axioms(seed, name, N):
    graph = GRAPHS[name]
    rng = np.random.default_rng(seed)
    f, g, h = (random_signal(rng, graph.refined_size(N)) for _ in range(3))
    a, b = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
    ip = lambda x, y: vertex_inner_product(x, y, graph, N)  # noqa: E731
    assert abs(ip(f, g) - np.conj(ip(g, f))) < 1e-12
    assert abs(ip(a * f + b * h, g) - (a * ip(f, g) + b * ip(h, g))) < 1e-11
    assert ip(f, f).real > 0 and abs(ip(f, f).imag) < 1e-14


# --- signals ------------------------------------------------------------------------

def test_edge_samples_and_assemble_are_inverse(graph, rng):
    N = 8
    f = random_signal(rng, graph.refined_size(N))
    s = edge_samples(f, graph, N)
    assert s.shape == (graph.edge_count, N + 1)
    assert np.array_equal(s[:, 0], f[graph.tails])
    back = assemble_signal(s, graph, tol=1e-12)
    assert np.array_equal(back.values, f)


def test_assemble_detects_disagreement(rng):
    graph = cycle_graph(3)
    s = edge_samples(random_signal(rng, graph.refined_size(4)), graph, 4)
    s[2, 0] += 1.0
    with pytest.raises(ArithmeticError):
        assemble_signal(s, graph, tol=1e-8)


def test_vertex_signal_json():
    sig = VertexSignal(2, [1 + 2j, 3.5, -1j])
    back = VertexSignal.from_json(json.loads(json.dumps(sig.to_json())))
    assert back.N == 2 and np.array_equal(back.values, sig.values)
    with pytest.raises(ValueError):
        VertexSignal.from_json({"N": 2})
