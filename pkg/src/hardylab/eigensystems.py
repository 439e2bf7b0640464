"""Eigenfunction families of linear fractional composition operators.

Two families are built here.  For a map with an attractive interior fixed
point, the Koenigs function solves the multiplicative functional equation
kappa o f = lambda * kappa; its powers exhaust all eigenfunctions.  For a
parabolic map fixing 1, the singular inner functions
psi_t = exp[t (z+1)/(z-1)] form a one-parameter eigenfamily with
eigenvalues e^{i a t} spiraling into the origin, and the span-distance
experiment exhibits the approximate completeness of that family, which is
exactly the minimality failure that rules out a symmetrizing conjugation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    MultiplierNotAttractive,
    NoConvergence,
    NegativeParameter,
    NoInteriorFixedPoint,
    NotParabolic,
    NotParabolicNonAutomorphism,
    TargetInGrid,
)
from .hardy import DEFAULT_DIM, as_coeffs, cauchy_product, lft_series, series_exp
from .moebius import (
    ATOL,
    MapKind,
    Moebius,
    classify,
    cayley_translation,
    compose,
    fixed_points,
    involution,
    is_infinity,
    iterate,
)
from .numerics import span_distance
from .operators import comp_matrix


# ---------------------------------------------------------------------------
# Koenigs eigenfunctions (interior attractive fixed point)

@dataclass(frozen=True)
class KoenigsData:
    """Koenigs eigenfunction data, gauge-fixed to kappa'(alpha) = 1.

    `kappa_map` is the exact rational form (the solution of the
    multiplicative functional equation is itself linear fractional when
    the symbol is); `kappa` is its truncated coefficient vector.
    """

    symbol: Moebius
    alpha: complex
    multiplier: complex
    kappa: np.ndarray
    method: str
    kappa_map: Moebius | None = None


def _interior_data(f: Moebius) -> tuple[complex, complex]:
    cls = classify(f)
    if cls.kind == MapKind.ROTATION:
        alpha, lam = complex(0.0), cls.multiplier
    elif cls.kind in (MapKind.INTERIOR_ATTRACTIVE, MapKind.ELLIPTIC_AUTOMORPHISM):
        alpha, lam = cls.fixed_points[0], cls.multiplier
    elif cls.kind == MapKind.IDENTITY:
        raise MultiplierNotAttractive("identity has multiplier 1")
    else:
        raise NoInteriorFixedPoint(f"map of kind {cls.kind.value} fixes no interior point")
    if not ATOL < abs(lam) < 1.0 - ATOL:
        raise MultiplierNotAttractive(
            f"need 0 < |multiplier| < 1, got |lambda| = {abs(lam):.9g}"
        )
    return alpha, lam


def _koenigs_map(f: Moebius, alpha: complex) -> Moebius:
    """Closed form: move alpha to 0 by the involution sigma, send the image
    of the second fixed point to infinity, normalize the derivative."""
    sigma = involution(alpha)
    fps = fixed_points(f)
    others = [fp.point for fp in fps if is_infinity(fp.point) or abs(fp.point - alpha) > 1e-9]
    z1 = sigma(others[0]) if others else None
    if z1 is None or is_infinity(z1):
        base = Moebius(1, 0, 0, 1)  # w
    else:
        base = Moebius(1, 0, -1.0 / z1, 1)  # w / (1 - w/z1)
    raw = compose(base, sigma)
    der = raw.derivative(alpha)
    return Moebius(raw.a / der, raw.b / der, raw.c, raw.d)


def _koenigs_iterate(f: Moebius, alpha: complex, lam: complex, dim: int) -> np.ndarray:
    """Iteration lambda^{-n} sigma o f^[n], accelerated by one Richardson
    step with the known error ratio lambda^m.

    Depth is chosen so |lambda|^n ~ 1e-5: deep enough for the extrapolated
    error ~ |lambda|^{2n+m}, shallow enough that the near-degenerate
    composite does not amplify roundoff (relative error ~ eps/|lambda|^n).
    """
    sigma = involution(alpha)
    r = abs(lam)
    n1 = max(3, min(300, math.ceil(math.log(1e-5) / math.log(r))))
    m = max(2, min(60, math.ceil(math.log(0.05) / math.log(r))))
    f_n1 = iterate(f, n1)
    f_n2 = iterate(f, m)
    t1 = lft_series(compose(sigma, f_n1), dim) / lam**n1
    t2 = lft_series(compose(sigma, compose(f_n2, f_n1)), dim) / lam ** (n1 + m)
    ratio = lam**m
    extrapolated = (t2 - ratio * t1) / (1.0 - ratio)
    dsigma = sigma.derivative(alpha)
    return extrapolated / dsigma


def schroeder_grid_residual(kappa_map: Moebius, f: Moebius, lam: complex,
                            radius: float = 0.9, points: int = 64) -> float:
    """max |kappa(f(z)) - lambda kappa(z)| over a circle grid, with both
    sides evaluated through the exact rational forms."""
    left = compose(kappa_map, f)
    worst = 0.0
    for k in range(points):
        z = radius * cmath.exp(2j * math.pi * k / points)
        worst = max(worst, abs(left(z) - lam * kappa_map(z)))
    return worst


def koenigs(
    f: Moebius,
    dim: int = DEFAULT_DIM,
    method: str = "closed_form",
    cross_check: bool = True,
    agreement_tol: float = 1e-8,
) -> KoenigsData:
    """Koenigs eigenfunction of a map with attractive interior fixed point.

    The closed form and the accelerated iteration are compared on the
    leading dim/2 coefficients whenever `cross_check` is set (or the
    iteration result is requested); disagreement raises NoConvergence.
    The functional-equation residual on the radius-0.9 grid is asserted
    below 1e-8 using the exact rational form.
    """
    alpha, lam = _interior_data(f)
    kmap = _koenigs_map(f, alpha)
    closed = lft_series(kmap, dim)
    chosen = closed
    if cross_check or method == "iteration":
        iterated = _koenigs_iterate(f, alpha, lam, dim)
        head = slice(0, max(1, dim // 2))
        gap = float(np.max(np.abs(closed[head] - iterated[head])))
        if gap > agreement_tol:
            raise NoConvergence(
                f"closed form and iteration disagree by {gap:.3e} on leading coefficients"
            )
        if method == "iteration":
            chosen = iterated
    residual = schroeder_grid_residual(kmap, f, lam)
    if residual > 1e-8:
        raise NoConvergence(f"functional equation residual {residual:.3e} above 1e-8")
    return KoenigsData(
        symbol=f,
        alpha=alpha,
        multiplier=lam,
        kappa=chosen,
        method=method,
        kappa_map=kmap if method == "closed_form" else None,
    )


def koenigs_powers(kd: KoenigsData, max_n: int, check_tol: float | None = None):
    """Powers kappa^n for n = 0..max_n by repeated series products.

    With `check_tol` set, each power is required to satisfy the eigenvalue
    residual ||C kappa^n - lambda^n kappa^n|| / ||kappa^n|| < check_tol
    under the compressed operator.  That bound is only meaningful when the
    coefficient tails of kappa^n decay (pole strictly outside the closed
    disk); callers with boundary-pole data should leave it unset.
    """
    kappa = as_coeffs(kd.kappa)
    powers = [np.zeros(kappa.size, dtype=np.complex128)]
    powers[0][0] = 1.0
    for _ in range(max_n):
        powers.append(cauchy_product(powers[-1], kappa))
    if check_tol is not None:
        t = comp_matrix(kd.symbol, kappa.size).mat
        for n, p in enumerate(powers):
            res = float(np.linalg.norm(t @ p - kd.multiplier**n * p) / np.linalg.norm(p))
            if res > check_tol:
                raise NoConvergence(
                    f"eigen-residual {res:.3e} of power {n} exceeds {check_tol:.1e}"
                )
    return powers


def koenigs_eigen_residuals(kd: KoenigsData, max_n: int) -> list[float]:
    """Relative eigen-residuals of the powers under the compression."""
    powers = koenigs_powers(kd, max_n)
    t = comp_matrix(kd.symbol, as_coeffs(kd.kappa).size).mat
    out = []
    for n, p in enumerate(powers):
        out.append(float(np.linalg.norm(t @ p - kd.multiplier**n * p) / np.linalg.norm(p)))
    return out


# ---------------------------------------------------------------------------
# parabolic eigenfamily psi_t

@dataclass(frozen=True)
class ParabolicEigenData:
    """One member of the singular inner eigenfamily of a parabolic map
    fixing 1, with its eigenvalue e^{i a t}."""

    a: complex
    t: float
    psi: np.ndarray
    eigenvalue: complex


def psi_t(a: complex, t: float, dim: int = DEFAULT_DIM) -> ParabolicEigenData:
    """exp[t (z+1)/(z-1)] truncated to `dim` coefficients.

    Built from (z+1)/(z-1) = -1 - 2 sum_{k>=1} z^k, so the coefficient
    vector is the series exponential of (-t, -2t, -2t, ...); coefficient 0
    is e^{-t} and the full function has unit norm.
    """
    a = complex(a)
    if t < 0:
        raise NegativeParameter(f"t must be >= 0, got {t}")
    if a.imag < -ATOL:
        raise NegativeParameter(f"Im a must be >= 0, got {a.imag}")
    exponent = np.full(dim, -2.0 * t, dtype=np.complex128)
    exponent[0] = -t
    psi = series_exp(exponent)
    return ParabolicEigenData(a=a, t=float(t), psi=psi, eigenvalue=cmath.exp(1j * a * t))


def _translation_parameter(f: Moebius) -> complex:
    a = cayley_translation(f)
    p = fixed_points(f)[0].point
    if abs(p - 1.0) > 1e-8:
        raise NotParabolic(
            f"fixed point {p:.9g} must be rotated to 1 before using the psi family"
        )
    return a


def parabolic_eigen_residual(f: Moebius, t: float, dim: int = DEFAULT_DIM) -> float:
    """||C psi_t - e^{iat} psi_t|| / ||psi_t|| under the compression of a
    parabolic map fixing 1."""
    a = _translation_parameter(f)
    data = psi_t(a, t, dim)
    m = comp_matrix(f, dim).mat
    return float(
        np.linalg.norm(m @ data.psi - data.eigenvalue * data.psi)
        / np.linalg.norm(data.psi)
    )


def spectrum_spiral(f: Moebius, t_grid) -> list[complex]:
    """Eigenvalues e^{iat} along a parameter grid for a parabolic
    non-automorphism; moduli e^{-t Im a} decrease strictly in t."""
    a = cayley_translation(f)
    if a.imag <= ATOL:
        raise NotParabolicNonAutomorphism(
            f"translation parameter {a:.6g} is real: parabolic automorphism"
        )
    return [cmath.exp(1j * a * float(t)) for t in t_grid]


@dataclass(frozen=True)
class GramMinimalityReport:
    """Span distances of a held-out eigenfamily member against growing
    prefixes of the family, plus Gram conditioning per prefix."""

    t_grid: tuple[float, ...]
    t_target: float
    dim: int
    distances: tuple[float, ...]
    gram_sigma_min: tuple[float, ...]
    interpretation: str


def gram_minimality_experiment(
    f: Moebius, t_grid, t_target: float, dim: int = DEFAULT_DIM
) -> GramMinimalityReport:
    """Distances from psi_{t_target} to the span of {psi_{t_n}} prefixes.

    Distances are normalized by ||psi_{t_target}|| and the family is
    normalized before forming Gram matrices, since the separation question
    is scale-invariant.  The target must not belong to the grid.
    """
    a = cayley_translation(f)
    if a.imag <= ATOL:
        raise NotParabolicNonAutomorphism(
            "the span-distance experiment needs a parabolic non-automorphism"
        )
    grid = [float(t) for t in t_grid]
    if not grid:
        raise TargetInGrid("grid must be nonempty")
    if min(abs(t - t_target) for t in grid) < 1e-12:
        raise TargetInGrid(f"target t = {t_target} coincides with a grid node")
    target = psi_t(a, t_target, dim).psi
    tnorm = float(np.linalg.norm(target))
    family = [psi_t(a, t, dim).psi for t in grid]
    unit = [v / np.linalg.norm(v) for v in family]
    distances = []
    sigma_min = []
    for m in range(1, len(grid) + 1):
        distances.append(span_distance(target, family[:m]) / tnorm)
        block = np.column_stack(unit[:m])
        gram = block.conj().T @ block
        sigma_min.append(float(np.linalg.svd(gram, compute_uv=False)[-1]))
    interpretation = (
        "normalized span distances decay toward zero: the held-out eigenvector is"
        " approximately in the closed span of the rest of the family, so the family"
        " is not minimal and no biorthogonal system (hence no symmetrizing"
        " conjugation) can exist"
    )
    return GramMinimalityReport(
        t_grid=tuple(grid),
        t_target=float(t_target),
        dim=dim,
        distances=tuple(distances),
        gram_sigma_min=tuple(sigma_min),
        interpretation=interpretation,
    )
