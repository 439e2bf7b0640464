"""Dense complex linear-algebra kernels used by every other module.

All operations are pure functions of plain numpy arrays (complex128).
Sizes stay at desk scale (N <= 256), so everything is dense and there is
no need for sparse or blocked paths.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NoConvergence, SingularInput

# Separates truncation noise (~1e-10 at N <= 64 for geometrically decaying
# symbols) from genuine kernel directions.
DEFAULT_RANK_TOL = 1e-8

# Invertibility floor for the polar Newton iteration.
_POLAR_SINGULAR_FLOOR = 1e-12


def as_cmatrix(a) -> np.ndarray:
    """Coerce input to a finite complex matrix with positive dimensions."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or min(m.shape) == 0:
        raise DimensionMismatch(f"expected a nonempty matrix, got shape {m.shape}")
    if not np.isfinite(m.real).all() or not np.isfinite(m.imag).all():
        raise ValueError("matrix entries must be finite")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(a))


def polar_unitary(a, tol: float = 1e-12, max_iter: int = 100) -> np.ndarray:
    """Unitary factor U of the polar decomposition a = U P.

    Newton iteration X <- (X + inv(X*)) / 2 seeded with `a`, quadratically
    convergent for invertible input.  Stops when successive iterates differ
    by less than `tol` in Frobenius norm; the returned factor satisfies
    ||U* U - I||_F <= 10 * tol.

    Raises SingularInput when sigma_min <= 1e-12 * sigma_max, and
    NoConvergence when `max_iter` is exhausted or the unitarity defect of
    the converged iterate is still above 10 * tol.
    """
    m = as_cmatrix(a)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch("polar factor requires a square matrix")
    s = np.linalg.svd(m, compute_uv=False)
    if s[-1] <= _POLAR_SINGULAR_FLOOR * s[0]:
        raise SingularInput(
            f"matrix numerically singular: sigma_min/sigma_max = {s[-1] / s[0]:.3e}"
        )
    x = m.copy()
    for _ in range(max_iter):
        x_next = 0.5 * (x + np.linalg.inv(x.conj().T))
        step = frobenius(x_next - x)
        x = x_next
        if step < tol:
            defect = frobenius(x.conj().T @ x - np.eye(n))
            if defect > 10.0 * tol:
                raise NoConvergence(
                    f"polar iteration stalled with unitarity defect {defect:.3e}"
                )
            return x
    raise NoConvergence(f"polar iteration did not converge in {max_iter} steps")


def null_space_dim(a, rel_tol: float = DEFAULT_RANK_TOL) -> int:
    """Dimension of ker(a): columns minus the number of singular values at
    or above rel_tol * sigma_max."""
    m = as_cmatrix(a)
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0.0:
        return m.shape[1]
    rank = int(np.count_nonzero(s >= rel_tol * s[0]))
    return m.shape[1] - rank


def span_distance(target, basis) -> float:
    """Euclidean distance from `target` to the linear span of `basis`.

    Least squares via SVD, so heavily clustered bases (tiny Gram singular
    values) are handled gracefully.
    """
    t = np.asarray(target, dtype=np.complex128)
    if t.ndim != 1:
        raise DimensionMismatch("target must be a vector")
    vectors = [np.asarray(v, dtype=np.complex128) for v in basis]
    if not vectors:
        raise DimensionMismatch("basis must be nonempty")
    if any(v.shape != t.shape for v in vectors):
        raise DimensionMismatch("target and basis vectors must share one dimension")
    b = np.column_stack(vectors)
    coeff, *_ = np.linalg.lstsq(b, t, rcond=None)
    return float(np.linalg.norm(t - b @ coeff))
