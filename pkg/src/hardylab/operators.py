"""Truncated matrices of composition operators and operator-level tests.

The truncation scheme is compression: the N x N matrix of P_N C P_N in the
monomial basis.  Column j holds the first N coefficients of phi(z)^j, so
the adjoint of the compression is the compressed adjoint (exact at every
N) and all approximation error lives in the column tails.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NoInteriorFixedPoint, NotFiniteOrderElliptic, NotSelfMap
from .hardy import as_coeffs, cauchy_product, inner, kernel, lft_coeffs
from .moebius import (
    INFINITE_ORDER,
    DiskMapClass,
    MapKind,
    Moebius,
    classify,
    compose,
    elliptic_order,
    self_map_defect,
)
from .numerics import DEFAULT_RANK_TOL, as_cmatrix, frobenius, null_space_dim


@dataclass(frozen=True)
class OpMatrix:
    """Dense compression of an operator, with optional symbol provenance."""

    mat: np.ndarray
    symbol: Moebius | None = None

    def __post_init__(self):
        m = as_cmatrix(self.mat)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"compression must be square, got {m.shape}")
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


def matrix_of(t) -> np.ndarray:
    """Accept an OpMatrix or a plain array."""
    return t.mat if isinstance(t, OpMatrix) else as_cmatrix(t)


def comp_matrix(f: Moebius, dim: int) -> OpMatrix:
    """Compression of g -> g o f: column j = coefficients of f(z)^j."""
    defect = self_map_defect(f)
    if defect is not None:
        raise NotSelfMap(defect)
    phi = lft_coeffs(f, dim)
    cols = np.zeros((dim, dim), dtype=np.complex128)
    col = np.zeros(dim, dtype=np.complex128)
    col[0] = 1.0
    cols[:, 0] = col
    for j in range(1, dim):
        col = cauchy_product(col, phi)
        cols[:, j] = col
    return OpMatrix(cols, f)


def apply(t, f) -> np.ndarray:
    return matrix_of(t) @ as_coeffs(f)


def adjoint(t) -> OpMatrix:
    """Entrywise conjugate transpose (exact adjoint of the compression)."""
    return OpMatrix(matrix_of(t).conj().T)


def normality_residual(t) -> float:
    """||T*T - TT*||_F / ||T||_F^2; zero exactly for dilation symbols."""
    m = matrix_of(t)
    mh = m.conj().T
    return frobenius(mh @ m - m @ mh) / frobenius(m) ** 2


def commutant_dim(t, rel_tol: float = DEFAULT_RANK_TOL) -> int:
    """Dimension of {X : XT = TX and XT* = T*X}.

    Realized as the null space of the stacked linear map
    X -> (XT - TX, XT* - T*X) on the N^2-dimensional matrix space.
    """
    m = matrix_of(t)
    n = m.shape[0]
    eye = np.eye(n)
    mh = m.conj().T
    top = np.kron(m.T, eye) - np.kron(eye, m)
    bottom = np.kron(mh.T, eye) - np.kron(eye, mh)
    return null_space_dim(np.vstack([top, bottom]), rel_tol)


@dataclass(frozen=True)
class EllipticSum:
    """I + sum of the compressions of the iterates of a finite-order map."""

    op: OpMatrix
    order: int
    residual: float


def elliptic_sum(f: Moebius, dim: int) -> EllipticSum:
    """T = I + sum_{k=1}^{ord-1} compression of the k-th iterate, with the
    relative defect of the degree-two identity T^2 = ord * T.

    Iterates are composed exactly at symbol level, never as matrix powers.
    """
    order = elliptic_order(f)
    if order == INFINITE_ORDER or order < 2:
        raise NotFiniteOrderElliptic(f"detected order {order}; need finite order >= 2")
    order = int(order)
    total = np.eye(dim, dtype=np.complex128)
    g = f
    for _ in range(order - 1):
        total = total + comp_matrix(g, dim).mat
        g = compose(g, f)
    residual = frobenius(total @ total - order * total) / frobenius(total) ** 2
    return EllipticSum(OpMatrix(total), order, residual)


@dataclass(frozen=True)
class OrbitReport:
    """Pairings of the orbit of a sample vector against an adjoint
    eigenvector at eigenvalue 1 (the kernel at the interior fixed point)."""

    symbol: Moebius
    fixed_point: complex
    eigenvalue: complex
    values: tuple[complex, ...]
    expected: complex
    max_deviation: float
    conclusion: str = field(default="")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


def _interior_fixed_point(cls: DiskMapClass) -> complex:
    if cls.kind in (MapKind.IDENTITY, MapKind.ROTATION):
        return complex(0.0)
    if cls.kind in (MapKind.INTERIOR_ATTRACTIVE, MapKind.ELLIPTIC_AUTOMORPHISM):
        return cls.fixed_points[0]
    raise NoInteriorFixedPoint(f"map of kind {cls.kind.value} fixes no interior point")


def orbit_projection_test(f: Moebius, sample, n_max: int = 50) -> OrbitReport:
    """Check that <K_alpha, T^n sample> stays constant for n <= n_max.

    The kernel at the fixed point is an adjoint eigenvector at eigenvalue
    1, so every orbit is pinned to a fixed affine slice of the space and
    cannot be dense.
    """
    cls = classify(f)
    alpha = _interior_fixed_point(cls)
    s = as_coeffs(sample)
    g = kernel(alpha, 0, s.size)
    t = comp_matrix(f, s.size).mat
    values = []
    cur = s
    for _ in range(n_max + 1):
        values.append(inner(g, cur))
        cur = t @ cur
    expected = values[0]
    max_dev = max(abs(v - expected) for v in values)
    return OrbitReport(
        symbol=f,
        fixed_point=alpha,
        eigenvalue=complex(1.0),
        values=tuple(values),
        expected=expected,
        max_deviation=max_dev,
        conclusion="orbit pairings constant: orbit confined to a hyperplane slice, not dense",
    )
