import math

import numpy as np
import pytest

from qgfft.eigenbasis import EdgeWaveFunction, cosine_eigenfunction, continuous_inner_product
from qgfft.oracle import direct_dft, naive_forward, naive_inverse, quadrature_inner_product
from qgfft.transform import build_basis, fft_forward, fft_inverse

from conftest import GRAPHS, random_signal


@pytest.mark.parametrize("N", [8, 16])
def test_forward_and_inverse_agree_with_fast_path(graph, rng, N):
    basis = build_basis(graph, N)
    f = random_signal(rng, graph.refined_size(N))
    fast = fft_forward(f, basis)
    slow = naive_forward(f, basis)
    assert np.max(np.abs(fast.flat() - slow.flat())) <= 1e-9
    assert np.max(np.abs(fft_inverse(fast, basis).values - naive_inverse(fast, basis))) <= 1e-9


def test_constant_signal_zero_block():
    basis = build_basis(GRAPHS["C4"], 8)
    f = np.ones(basis.graph.refined_size(8))
    slow = naive_forward(f, basis)
    assert slow.zero == pytest.approx(1.0, abs=1e-15)
    assert fft_forward(f, basis).zero == pytest.approx(slow.zero, abs=1e-15)


def test_naive_round_trip(rng):
    basis = build_basis(GRAPHS["bowtie"], 8)
    f = random_signal(rng, basis.graph.refined_size(8))
    assert np.max(np.abs(naive_inverse(naive_forward(f, basis), basis) - f)) <= 1e-9


def test_quadrature_examples(rng):
    graph = GRAPHS["K42"]
    one = EdgeWaveFunction(0.0, np.tile([1.0, 0.0], (graph.edge_count, 1)))
    assert quadrature_inner_product(one, one, 100) == pytest.approx(1.0, abs=1e-14)
    c = cosine_eigenfunction(graph, 16)
    assert abs(quadrature_inner_product(c, c, 10_000) - 0.5) <= 1e-8
    f = EdgeWaveFunction(3.3, rng.normal(size=(8, 2)) + 1j * rng.normal(size=(8, 2)))
    assert abs(quadrature_inner_product(f, f) - continuous_inner_product(f, f)) <= 1e-8
    with pytest.raises(ValueError):
        quadrature_inner_product(f, f, 101)
    with pytest.raises(ValueError):
        quadrature_inner_product(f, f, 50)


def test_quadrature_converges_at_fourth_order():
    f = EdgeWaveFunction(7.0, np.array([[1.0, 0.5j], [0.2, -1.0]]))
    exact = continuous_inner_product(f, f)
    errs = [abs(quadrature_inner_product(f, f, n) - exact) for n in (100, 200, 400)]
    rates = [math.log2(errs[i] / errs[i + 1]) for i in range(2)]
    assert all(3.8 < r < 4.2 for r in rates)


def test_direct_dft():
    assert np.allclose(direct_dft([1, 0, 0, 0]), [1, 1, 1, 1])
    assert np.allclose(direct_dft(np.ones(5)), [5, 0, 0, 0, 0])
    assert np.allclose(direct_dft(np.ones(3), inverse=True), [1, 0, 0])
