"""Antilinear conjugations, the bilinear pairing, and symmetry residuals.

Every conjugation on the truncated space is stored through a unitary U
with action f -> U conj(f) (entrywise coefficient conjugation).  The
axioms (antilinear, isometric, involutive) reduce to U unitary and
U conj(U) = I; both residuals are measured at construction and kept on
the object.

The involution-symbol conjugation is assembled from the unitary factor W
of the compressed composition operator at the real parameter, rotated
into place: U = D conj(W) D with D = diag(e^{i k theta}),
theta = -arg(alpha).  The compression is numerically rank-deficient for
N >= 32 (its high columns are truncations of inner functions whose
coefficient mass lies mostly above the cut), so W is taken as the
orthogonal polar factor computed by SVD and then snapped to the nearest
involution (sign function of its symmetric part).  The true unitary
factor of an invertible involution is a self-adjoint unitary involution,
so the snap restores exactly the structure the limit demands, and the
conjugation axioms hold to machine precision at every N.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import AlphaOutOfRange, DimensionMismatch, PolarFailure
from .hardy import as_coeffs, inner
from .moebius import involution
from .numerics import as_cmatrix, frobenius
from .operators import comp_matrix, matrix_of

#: Residual cap enforced at construction; every supported kind is exactly
#: representable at finite N, so machine-level slack suffices.
EXACT_AXIOM_TOL = 1e-9


@dataclass(frozen=True)
class Conjugation:
    """Antilinear map f -> U conj(f) with measured axiom residuals."""

    u: np.ndarray
    kind: str
    params: dict
    unitarity_residual: float
    involution_residual: float

    def __call__(self, f) -> np.ndarray:
        v = as_coeffs(f)
        if v.size != self.dim:
            raise DimensionMismatch(f"vector has dim {v.size}, conjugation {self.dim}")
        return self.u @ np.conj(v)

    @property
    def dim(self) -> int:
        return self.u.shape[0]

    def rescaled(self, lam: complex) -> "Conjugation":
        """lam * C for unimodular lam is again a conjugation."""
        if abs(abs(lam) - 1.0) > 1e-12:
            raise ValueError("rescaling factor must be unimodular")
        return replace(self, u=lam * self.u, kind=f"scaled-{self.kind}")


def _axiom_residuals(u: np.ndarray) -> tuple[float, float]:
    eye = np.eye(u.shape[0])
    return (
        frobenius(u.conj().T @ u - eye),
        frobenius(u @ np.conj(u) - eye),
    )


def _build(u, kind, params, axiom_tol) -> Conjugation:
    u = as_cmatrix(u)
    unit, invol = _axiom_residuals(u)
    if axiom_tol is not None and max(unit, invol) > axiom_tol:
        raise PolarFailure(
            f"conjugation axioms violated: unitarity {unit:.3e},"
            f" involution {invol:.3e}, tolerance {axiom_tol:.3e}"
        )
    return Conjugation(u, kind, params, unit, invol)


def canonical(dim: int) -> Conjugation:
    """Plain coefficient conjugation (U = I); fixes the monomial basis."""
    return _build(np.eye(dim), "canonical", {}, EXACT_AXIOM_TOL)


def rotation_conjugation(theta: float, dim: int) -> Conjugation:
    """Rotation-conjugated coefficient conjugation: U = diag(e^{2 i k theta})."""
    u = np.diag(np.exp(2j * theta * np.arange(dim)))
    return _build(u, "rotation", {"theta": float(theta)}, EXACT_AXIOM_TOL)


def involutive_polar_factor(m) -> np.ndarray:
    """Orthogonal polar factor of a real compression, snapped to the
    nearest involution.

    The SVD polar factor u vh is the closest orthogonal matrix to m; when
    m compresses an operator that is an involution, the limit factor is
    symmetric with eigenvalues +-1, so the snap (sign function of the
    symmetric part) removes only truncation noise while making the
    involution identity exact.
    """
    m = np.asarray(m)
    u, _, vh = np.linalg.svd(m)
    w = u @ vh
    lam, q = np.linalg.eigh(0.5 * (w + w.conj().T))
    signs = np.where(lam >= 0.0, 1.0, -1.0)
    return (q * signs) @ q.conj().T


def jalpha(alpha: complex, dim: int, axiom_tol: float | None = None) -> Conjugation:
    """Conjugation symmetrizing the involution-symbol composition operator.

    Requires 0 < |alpha| < 1.  When alpha is real the rotations collapse
    and U is the snapped polar factor W itself.
    """
    alpha = complex(alpha)
    if not 0.0 < abs(alpha) < 1.0:
        raise AlphaOutOfRange(f"need 0 < |alpha| < 1, got {abs(alpha):.6g}")
    theta = -np.angle(alpha)
    alpha_real = abs(alpha)
    w = involutive_polar_factor(comp_matrix(involution(alpha_real), dim).mat.real)
    d = np.exp(1j * theta * np.arange(dim))
    u = d[:, None] * np.conj(w) * d[None, :]
    tol = EXACT_AXIOM_TOL if axiom_tol is None else axiom_tol
    return _build(u, "jalpha", {"alpha": alpha}, tol)


def build_conjugation(
    kind: str,
    dim: int,
    theta: float = 0.0,
    alpha: complex | None = None,
    axiom_tol: float | None = None,
) -> Conjugation:
    """Dispatcher over the three supported kinds: 'canonical',
    'rotation' (needs theta), 'jalpha' (needs alpha)."""
    key = kind.lower()
    if key == "canonical":
        return canonical(dim)
    if key == "rotation":
        return rotation_conjugation(theta, dim)
    if key == "jalpha":
        if alpha is None:
            raise AlphaOutOfRange("jalpha requires an alpha parameter")
        return jalpha(alpha, dim, axiom_tol=axiom_tol)
    raise ValueError(f"unknown conjugation kind {kind!r}")


def bilinear(f, g, c: Conjugation) -> complex:
    """The pairing [f, g] = <f, C g>; symmetric in its two slots.

    Symmetry is a consequence of the conjugation axioms, so it is asserted
    up to the measured involution residual of c.
    """
    a, b = as_coeffs(f), as_coeffs(g)
    fwd = inner(a, c(b))
    bwd = inner(b, c(a))
    scale = float(np.linalg.norm(a) * np.linalg.norm(b))
    slack = 10.0 * (c.involution_residual + 1e-14) * (1.0 + scale)
    if abs(fwd - bwd) > slack:
        raise PolarFailure(
            f"bilinear form asymmetry {abs(fwd - bwd):.3e} exceeds slack {slack:.3e}"
        )
    return fwd


def csym_residual(t, c: Conjugation) -> float:
    """||T - C T* C||_F / ||T||_F with C T* C realized as U T^t conj(U)."""
    m = matrix_of(t)
    if m.shape[0] != c.dim:
        raise DimensionMismatch(f"operator dim {m.shape[0]} vs conjugation {c.dim}")
    sandwich = c.u @ m.T @ np.conj(c.u)
    return frobenius(m - sandwich) / frobenius(m)


def c_orthogonality_matrix(family, c: Conjugation) -> np.ndarray:
    """Matrix of pairings B_ij = [u_i, u_j] for a family of vectors.

    B is symmetric (not Hermitian); for eigenvectors of a C-symmetric
    operator at distinct eigenvalues the off-diagonal vanishes.
    """
    vectors = [as_coeffs(v) for v in family]
    if not vectors:
        raise DimensionMismatch("family must be nonempty")
    if any(v.size != c.dim for v in vectors):
        raise DimensionMismatch("family vectors must match the conjugation dimension")
    f = np.column_stack(vectors)
    return f.T @ np.conj(c.u) @ f


def max_offdiagonal(b) -> float:
    m = np.asarray(b)
    off = m - np.diag(np.diag(m))
    return float(np.max(np.abs(off))) if m.size else 0.0
