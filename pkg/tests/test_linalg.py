import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgfft.linalg import RankDeficiencyError, gram_schmidt


def random_gram(rng, n, dim=None, batch=()):
    dim = dim or n
    v = rng.normal(size=(*batch, n, dim)) + 1j * rng.normal(size=(*batch, n, dim))
    return v @ np.conj(np.swapaxes(v, -1, -2))


@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
def test_orthonormalises(seed, n):
    rng = np.random.default_rng(seed)
    g = random_gram(rng, n, dim=n + 2)
    b = gram_schmidt(g)
    assert np.allclose(b @ g @ b.conj().T, np.eye(n), atol=1e-9)
    assert np.allclose(np.triu(b, 1), 0)


def test_batched(rng):
    g = random_gram(rng, 3, batch=(4,))
    b = gram_schmidt(g)
    assert b.shape == (4, 3, 3)
    for gi, bi in zip(g, b):
        assert np.allclose(bi, gram_schmidt(gi))


def test_identity_is_fixed():
    assert np.allclose(gram_schmidt(np.eye(4)), np.eye(4))


def test_dependent_vectors(rng):
    v = rng.normal(size=(2, 3))
    v = np.vstack([v, v[0] + v[1]])
    g = v @ v.T
    with pytest.raises(RankDeficiencyError):
        gram_schmidt(g)
    b = gram_schmidt(g, drop_dependent=True)
    assert b.shape == (2, 3)
    with pytest.raises(ValueError):
        gram_schmidt(g[None], drop_dependent=True)
