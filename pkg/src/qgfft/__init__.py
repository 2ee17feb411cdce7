"""Spectral bases and fast Fourier transforms for equilateral quantum graphs.

A connected simple graph with unit edges is sampled at ``N`` equally spaced
points per edge.  The eigenfunctions of the continuous Laplacian (with
continuity and Kirchhoff conditions) restrict to an orthogonal block basis
of the sampled graph, and each block's inner products reduce to one
radix-2 FFT per edge.
"""
from .eigenbasis import (
    EdgeWaveFunction,
    PrimitiveBlock,
    PrimitiveSpectrum,
    continuous_inner_product,
    cosine_eigenfunction,
    cycle_eigenspace,
    flow_space,
    lift,
    odd_eigenspace,
    primitive_spectrum,
    rescale,
    shift,
)
from .fft import BACKEND, available_backends, radix2_fft
from .graph import (
    Graph,
    GraphValidationError,
    VertexSignal,
    bipartition,
    bowtie,
    complete_bipartite,
    cycle_graph,
    spanning_tree_cycles,
    validate,
    vertex_inner_product,
)
from .sampling import inner_product_error, restrict, trapezoid
from .spectrum import DiscreteSpectrum, apply_delta_N, delta_N_eigenvalue, eigensolve_delta1
from .transform import (
    GraphDFT,
    SpectralBasis,
    build_basis,
    coefficients,
    fft_forward,
    fft_inverse,
    parseval_norm,
    spectral_filter,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DiscreteSpectrum", "EdgeWaveFunction", "Graph", "GraphDFT",
    "GraphValidationError", "PrimitiveBlock", "PrimitiveSpectrum", "SpectralBasis",
    "VertexSignal", "apply_delta_N", "available_backends", "bipartition", "bowtie",
    "build_basis", "coefficients", "complete_bipartite", "continuous_inner_product",
    "cosine_eigenfunction", "cycle_eigenspace", "cycle_graph", "delta_N_eigenvalue",
    "eigensolve_delta1", "fft_forward", "fft_inverse", "flow_space", "inner_product_error",
    "lift", "odd_eigenspace", "parseval_norm", "primitive_spectrum", "radix2_fft",
    "rescale", "restrict", "shift", "spanning_tree_cycles", "spectral_filter",
    "synthesize", "trapezoid", "validate", "vertex_inner_product",
]
