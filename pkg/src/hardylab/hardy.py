"""Truncated Taylor-coefficient model of the Hardy space.

A function f is stored as the complex vector of its first N Taylor
coefficients (index k holds the coefficient of z^k); the inner product is
the coefficient l^2 pairing, linear in the first slot.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, DomainError, NotSelfMap, PointOutsideDisk
from .moebius import Moebius, self_map_defect

#: Default truncation dimension; coefficient tails of all symbols in scope
#: decay geometrically, giving ~1e-9 tails at N = 64 for |alpha| <= 0.7.
DEFAULT_DIM = 64


def as_coeffs(f) -> np.ndarray:
    v = np.asarray(f, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a coefficient vector, got shape {v.shape}")
    if not np.isfinite(v.real).all() or not np.isfinite(v.imag).all():
        raise ValueError("coefficients must be finite")
    return v


def _pair(f, g):
    a, b = as_coeffs(f), as_coeffs(g)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimensions differ: {a.size} vs {b.size}")
    return a, b


def inner(f, g) -> complex:
    """Sum of f_k * conj(g_k); conjugate-symmetric, linear in f."""
    a, b = _pair(f, g)
    return complex(np.vdot(b, a))


def norm(f) -> float:
    return float(np.linalg.norm(as_coeffs(f)))


def evaluate(f, z):
    """Horner evaluation of the truncation at z (scalar or array)."""
    return np.polynomial.polynomial.polyval(z, as_coeffs(f))


def kernel(omega: complex, n: int, dim: int) -> np.ndarray:
    """Coefficients of the kernel that reproduces the n-th derivative at
    omega: entry k is k!/(k-n)! * conj(omega)^(k-n) for k >= n, else 0."""
    omega = complex(omega)
    if abs(omega) >= 1:
        raise PointOutsideDisk(f"|omega| = {abs(omega):.6g} is not < 1")
    if not 0 <= n < dim:
        raise DimensionMismatch(f"derivative order {n} must satisfy 0 <= n < {dim}")
    k = np.arange(dim, dtype=np.float64)
    falling = np.ones(dim)
    for j in range(n):
        falling *= k - j
    powers = np.zeros(dim, dtype=np.complex128)
    powers[n:] = np.conj(omega) ** np.arange(dim - n)
    return falling * powers


def cauchy_product(f, g) -> np.ndarray:
    """Truncated series product: (f g)_k = sum_{j<=k} f_j g_{k-j}."""
    a, b = _pair(f, g)
    return np.convolve(a, b)[: a.size]


def series_exp(f) -> np.ndarray:
    """exp of a truncated series via the derivative recurrence
    k g_k = sum_{j=1..k} j f_j g_{k-j}, g_0 = e^{f_0}."""
    a = as_coeffs(f)
    n = a.size
    g = np.zeros(n, dtype=np.complex128)
    g[0] = np.exp(a[0])
    jf = np.arange(n) * a
    for k in range(1, n):
        g[k] = np.dot(jf[1 : k + 1], g[k - 1 :: -1]) / k
    return g


def lft_series(m: Moebius, dim: int) -> np.ndarray:
    """Taylor coefficients of any linear fractional map analytic at 0.

    With q = -c/d: coefficient 0 is b/d, coefficient k >= 1 is
    (b q^k + a q^{k-1}) / d.  Converges on the closed disk only when the
    pole lies outside it; the truncated vector is well-defined regardless.
    """
    if m.d == 0:
        raise DomainError("map has a pole at the origin; no Taylor expansion")
    q = -m.c / m.d
    out = np.empty(dim, dtype=np.complex128)
    out[0] = m.b / m.d
    if dim > 1:
        k = np.arange(1, dim)
        out[1:] = (m.b * q**k + m.a * q ** (k - 1)) / m.d
    return out


def lft_coeffs(m: Moebius, dim: int) -> np.ndarray:
    """Taylor coefficients of a disk self-map (geometric expansion with
    ratio q = -c/d, |q| < 1)."""
    defect = self_map_defect(m)
    if defect is not None:
        raise NotSelfMap(defect)
    return lft_series(m, dim)
