import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgfft import fft
from qgfft._fft_py import bit_reversal_permutation
from qgfft.fft import available_backends, is_power_of_two, radix2_fft
from qgfft.oracle import direct_dft

BACKENDS = available_backends()


@pytest.mark.parametrize("backend", BACKENDS)
def test_simple_vectors(backend):
    assert np.allclose(radix2_fft(np.ones(8), backend=backend), [8, 0, 0, 0, 0, 0, 0, 0])
    impulse = np.zeros(8)
    impulse[0] = 1
    assert np.allclose(radix2_fft(impulse, backend=backend), np.ones(8))
    assert np.allclose(radix2_fft([3.0], backend=backend), [3.0])


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 4, 16, 64])
def test_matches_direct_dft(backend, n, rng):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    assert np.max(np.abs(radix2_fft(v, backend=backend) - direct_dft(v))) <= 1e-12
    assert np.max(np.abs(radix2_fft(v, "inverse", backend) - direct_dft(v, inverse=True))) <= 1e-12


@pytest.mark.parametrize("backend", BACKENDS)
def test_batched_rows_and_input_untouched(backend, rng):
    data = rng.normal(size=(5, 32)) + 1j * rng.normal(size=(5, 32))
    keep = data.copy()
    out = radix2_fft(data, backend=backend)
    assert np.array_equal(data, keep)
    assert np.max(np.abs(out - np.fft.fft(data, axis=-1))) <= 1e-12


@pytest.mark.parametrize("backend", BACKENDS)
def test_rejects_bad_lengths(backend):
    for bad in (np.ones(6), np.ones(0), np.ones((2, 3, 4)), 5.0):
        with pytest.raises(ValueError):
            radix2_fft(bad, backend=backend)
    with pytest.raises(ValueError):
        radix2_fft(np.ones(4), direction="sideways", backend=backend)


@given(seed=st.integers(0, 2**32 - 1), log_n=st.integers(0, 10))
def test_inverse_undoes_forward(seed, log_n):
    n = 2 ** log_n
    rng = np.random.default_rng(seed)
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    for backend in BACKENDS:
        assert np.max(np.abs(radix2_fft(radix2_fft(v, backend=backend), "inverse", backend) - v)) <= 1e-12


def test_backends_identical_up_to_rounding(rng):
    v = rng.normal(size=(3, 1024)) + 0j
    outs = [radix2_fft(v, backend=b) for b in BACKENDS]
    for o in outs[1:]:
        assert np.max(np.abs(o - outs[0])) <= 1e-10


def test_bit_reversal():
    assert list(bit_reversal_permutation(8)) == [0, 4, 2, 6, 1, 5, 3, 7]
    assert list(bit_reversal_permutation(1)) == [0]


def test_is_power_of_two():
    assert [n for n in range(-2, 20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]
    assert not is_power_of_two(4.0)


def test_compiled_backend_is_default_when_built():
    assert fft.BACKEND == ("cython" if "cython" in BACKENDS else "python")


def test_environment_forces_fallback():
    code = "import qgfft.fft as f; print(f.BACKEND, f.available_backends())"
    out = subprocess.run(
        [sys.executable, "-c", code], env={"QGFFT_PURE_PYTHON": "1", "PATH": ""},
        capture_output=True, text=True, check=True,
    ).stdout
    assert out.strip() == "python ['python']"
