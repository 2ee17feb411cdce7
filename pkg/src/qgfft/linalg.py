"""Modified Gram-Schmidt driven by Gram matrices."""
import numpy as np


class RankDeficiencyError(np.linalg.LinAlgError):
    pass


def gram_schmidt(gram, rtol=1e-10, drop_dependent=False):
    """Orthonormalising transform for vectors known only through their Gram matrix.

    ``gram[..., j, p] = <v_j, v_p>`` (linear in the first slot).  Returns
    ``B`` with rows ``eta_i = sum_j B[i, j] v_j`` orthonormal, i.e.
    ``B @ gram @ B^H = I``.  Vectors are processed in index order with one
    reorthogonalisation pass, so ``B`` is lower triangular.

    Leading axes are batch axes.  With ``drop_dependent=True`` (2-D input
    only) vectors whose residual falls below ``rtol`` times the largest
    input norm are skipped and ``B`` has fewer rows; otherwise such a
    vector raises :class:`RankDeficiencyError`.
    """
    gram = np.asarray(gram, dtype=np.complex128)
    if drop_dependent and gram.ndim != 2:
        raise ValueError("drop_dependent needs a single Gram matrix")
    *batch, n, _ = gram.shape
    scale = np.sqrt(np.max(np.abs(np.diagonal(gram, axis1=-2, axis2=-1)), axis=-1, initial=0.0))

    def inner(a, b):
        # <sum a_j v_j, sum b_p v_p> = a^T G conj(b)
        return np.einsum("...j,...jp,...p->...", a, gram, b.conj())

    rows = []
    for i in range(n):
        v = np.zeros((*batch, n), dtype=np.complex128)
        v[..., i] = 1.0
        for _ in range(2):
            for q in rows:
                v = v - inner(v, q)[..., None] * q
        norm = np.sqrt(np.maximum(inner(v, v).real, 0.0))
        small = norm <= rtol * scale
        if np.any(small):
            if drop_dependent:
                continue
            raise RankDeficiencyError(f"vector {i} is numerically dependent on its predecessors")
        rows.append(v / norm[..., None])
    if not rows:
        return np.zeros((*batch, 0, n), dtype=np.complex128)
    return np.stack(rows, axis=-2)
