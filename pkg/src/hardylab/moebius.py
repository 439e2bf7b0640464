"""Algebra and classification of linear fractional self-maps of the disk.

A map z -> (a z + b)/(c z + d) is stored as four complex coefficients,
normalized so that d = 1 whenever d != 0 (else c = 1).  Self-maps of the
unit disk fall into the fixed-point trichotomy:

* an interior fixed point, either attractive (|multiplier| < 1) or an
  elliptic automorphism (unimodular multiplier);
* parabolic: a single boundary fixed point, automorphism exactly when the
  half-plane translation parameter is real;
* hyperbolic: an attractive boundary fixed point plus a second fixed point
  off the open disk, automorphism exactly when the second point is also
  on the circle.

Dilations b*z (including true rotations) and the identity are split off as
their own kinds: they are precisely the symbols with normal composition
operators, and every downstream decision treats them separately.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    AlphaOutOfRange,
    AmbiguousClass,
    DegenerateResult,
    IdentityMap,
    NoInteriorFixedPoint,
    NotElliptic,
    NotParabolic,
    NotSelfMap,
    ParseError,
)

# Tolerance band for boundary / unit-modulus decisions.
ATOL = 1e-9
# Quantities between ATOL and AMBIGUITY_ATOL of a boundary are surfaced as
# AmbiguousClass instead of being silently resolved.
AMBIGUITY_ATOL = 1e-8

# Relative discriminant floor below which the two fixed points are treated
# as one double (parabolic) root.  sqrt amplifies discriminant noise, so
# this cannot be pushed to machine epsilon.
_DISC_TOL = 1e-13

# Coefficientwise tolerance for recognizing the identity map.
_IDENTITY_TOL = 1e-12

# Largest elliptic order that is searched for; beyond this, finite and
# infinite order are numerically indistinguishable in double precision.
ORDER_CAP = 4096
INFINITE_ORDER = math.inf

#: Marker for the point at infinity on the Riemann sphere.
INF = complex(math.inf, 0.0)


def is_infinity(z) -> bool:
    z = complex(z)
    return math.isinf(z.real) or math.isinf(z.imag)


class MapKind(str, Enum):
    IDENTITY = "Identity"
    ROTATION = "Rotation"
    INTERIOR_ATTRACTIVE = "InteriorAttractive"
    ELLIPTIC_AUTOMORPHISM = "EllipticAutomorphism"
    PARABOLIC_AUTOMORPHISM = "ParabolicAutomorphism"
    PARABOLIC_NON_AUTOMORPHISM = "ParabolicNonAutomorphism"
    HYPERBOLIC_AUTOMORPHISM = "HyperbolicAutomorphism"
    HYPERBOLIC_NON_AUTOMORPHISM = "HyperbolicNonAutomorphism"


@dataclass(frozen=True)
class Moebius:
    """z -> (a z + b) / (c z + d) with ad - bc != 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(self.a), complex(self.b), complex(self.c), complex(self.d))
        if a * d - b * c == 0:
            raise DegenerateResult("coefficients describe a constant map")
        if d != 0:
            a, b, c, d = a / d, b / d, c / d, complex(1.0)
        else:
            a, b, d, c = a / c, b / c, d / c, complex(1.0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __call__(self, z: complex) -> complex:
        if is_infinity(z):
            return self.a / self.c if self.c != 0 else INF
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def derivative(self, z: complex) -> complex:
        return self.det / (self.c * z + self.d) ** 2

    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class FixedPoint:
    """Fixed point on the Riemann sphere with its multiplier phi'(p).

    The multiplier at infinity uses the chart w = 1/z, i.e. the derivative
    of 1/phi(1/w) at w = 0.
    """

    point: complex
    multiplier: complex
    multiplicity: int = 1


@dataclass(frozen=True)
class DiskMapClass:
    """Classification record: trichotomy kind, fixed points, multiplier.

    `multiplier` holds phi'(alpha) at the attractive or interior fixed
    point, the dilation parameter for Rotation, or the half-plane
    translation parameter for parabolic maps.  `order` is set for elliptic
    automorphisms only (math.inf marks undetectably large order).
    """

    kind: MapKind
    fixed_points: tuple[complex, ...]
    multiplier: complex
    order: int | float | None = None


# ---------------------------------------------------------------------------
# constructors

def identity() -> Moebius:
    return Moebius(1, 0, 0, 1)


def rotation(lam: complex) -> Moebius:
    """Dilation z -> lam * z (a rotation when |lam| = 1)."""
    return Moebius(lam, 0, 0, 1)


def involution(alpha: complex) -> Moebius:
    """The self-inverse disk automorphism z -> (alpha - z)/(1 - conj(alpha) z)."""
    alpha = complex(alpha)
    if abs(alpha) >= 1:
        raise AlphaOutOfRange(f"|alpha| must be < 1, got {abs(alpha):.6g}")
    return Moebius(-1, alpha, -alpha.conjugate(), 1)


def rotation_about(alpha: complex, lam: complex) -> Moebius:
    """Conjugate z -> lam*z by the involution at alpha; fixes alpha with
    multiplier lam."""
    m = involution(alpha)
    return compose(m, compose(rotation(lam), m))


#: Cayley map z -> i (1 + z)/(1 - z), disk onto upper half-plane.
CAYLEY = Moebius(1j, 1j, -1, 1)
#: Its inverse w -> (w - i)/(w + i).
CAYLEY_INV = Moebius(1, -1j, 1, 1j)


def from_halfplane_translation(a: complex) -> Moebius:
    """Disk map conjugate to the half-plane translation w -> w + a.

    Parabolic with fixed point 1; an automorphism exactly when a is real.
    """
    shift = Moebius(1, a, 0, 1)
    return compose(CAYLEY_INV, compose(shift, CAYLEY))


# ---------------------------------------------------------------------------
# algebra

def compose(f: Moebius, g: Moebius) -> Moebius:
    """f after g, via the product of coefficient matrices."""
    return Moebius(
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def inverse(f: Moebius) -> Moebius:
    return Moebius(f.d, -f.b, -f.c, f.a)


def iterate(f: Moebius, n: int) -> Moebius:
    """n-fold composite of f with itself (n >= 0)."""
    out = identity()
    for _ in range(n):
        out = compose(f, out)
    return out


def rotate_symbol(f: Moebius, theta: float) -> Moebius:
    """e^{i theta} f(e^{-i theta} z); preserves the classification kind."""
    w = cmath.exp(1j * theta)
    return compose(rotation(w), compose(f, rotation(1.0 / w)))


def approx_equal(f: Moebius, g: Moebius, tol: float = 1e-10) -> bool:
    """Coefficientwise comparison of the normalized representations."""
    return all(
        abs(x - y) <= tol for x, y in zip(f.coefficients(), g.coefficients())
    )


def _is_identity(f: Moebius) -> bool:
    return (
        abs(f.a - 1) <= _IDENTITY_TOL
        and abs(f.b) <= _IDENTITY_TOL
        and abs(f.c) <= _IDENTITY_TOL
        and abs(f.d - 1) <= _IDENTITY_TOL
    )


# ---------------------------------------------------------------------------
# fixed points and classification

def fixed_points(f: Moebius) -> tuple[FixedPoint, ...]:
    """Roots of c z^2 + (d - a) z - b = 0, with infinity fixed when c = 0.

    A double root is reported once with multiplicity 2.  Raises IdentityMap
    for the identity, whose fixed-point set is the whole sphere.
    """
    if _is_identity(f):
        raise IdentityMap("every point of the sphere is fixed")
    a, b, c, d = f.coefficients()
    if c == 0:
        scale = max(abs(a), abs(d))
        if abs(d - a) <= 1e-14 * scale:
            # z + b/d: infinity is the lone (double) fixed point
            return (FixedPoint(INF, complex(1.0), 2),)
        z = b / (d - a)
        return (FixedPoint(z, f.derivative(z)), FixedPoint(INF, d / a))
    disc = (d - a) ** 2 + 4.0 * b * c
    # compare against the quadratic's own scale: a near-identity map has all
    # three quadratic coefficients tiny, which must not read as a double root
    qscale = max(abs(d - a), math.sqrt(abs(b * c))) ** 2
    if abs(disc) <= _DISC_TOL * qscale:
        z = (a - d) / (2.0 * c)
        return (FixedPoint(z, f.derivative(z), 2),)
    sq = cmath.sqrt(disc)
    # pick the root with the larger numerator first, recover the other from
    # the product -b/c to dodge cancellation
    if abs(a - d + sq) >= abs(a - d - sq):
        r1 = (a - d + sq) / (2.0 * c)
    else:
        r1 = (a - d - sq) / (2.0 * c)
    if r1 == 0:
        r2 = (a - d) / c
    else:
        r2 = -b / (c * r1)
    return (FixedPoint(r1, f.derivative(r1)), FixedPoint(r2, f.derivative(r2)))


_BOUNDARY_GRID = 1024
_SELF_MAP_TOL = 1e-10


def self_map_defect(f: Moebius) -> str | None:
    """None when f maps the closed disk into itself, else a diagnostic."""
    if f.c != 0:
        pole = -f.d / f.c
        if abs(pole) <= 1.0:
            return f"pole at {pole:.6g} lies on or inside the closed disk"
    if abs(f(0)) >= 1.0 + _SELF_MAP_TOL:
        return f"|f(0)| = {abs(f(0)):.12g} exceeds 1"
    worst = 0.0
    for k in range(_BOUNDARY_GRID):
        z = cmath.exp(2j * math.pi * k / _BOUNDARY_GRID)
        worst = max(worst, abs(f(z)))
    if worst > 1.0 + _SELF_MAP_TOL:
        return f"boundary image reaches modulus {worst:.12g}"
    return None


def is_self_map(f: Moebius) -> bool:
    """Grid test: sup over 1024 boundary points of |f| <= 1 + 1e-10 and no
    pole on or inside the closed disk."""
    return self_map_defect(f) is None


def _banded(value: float, context: str, low: MapKind, high: MapKind,
            atol: float = ATOL) -> int:
    """Sign of `value` with a snap-to-zero band of width `atol` and an
    AmbiguousClass band up to AMBIGUITY_ATOL."""
    if abs(value) <= atol:
        return 0
    if abs(value) < AMBIGUITY_ATOL:
        raise AmbiguousClass(
            f"{context}: quantity {value:.3e} falls inside the tolerance band;"
            f" candidates {low.value} / {high.value}",
            candidates=(low, high),
        )
    return -1 if value < 0 else 1


def _circle_side(p: complex, context: str, low: MapKind, high: MapKind,
                 atol: float = ATOL) -> int:
    """-1 strictly inside the unit circle, 0 on it, +1 strictly outside."""
    if is_infinity(p):
        return 1
    return _banded(abs(p) - 1.0, context, low, high, atol)


def _unimodular_order(lam: complex, cap: int = ORDER_CAP,
                      tol: float = 1e-9) -> int | float:
    w = lam
    for n in range(1, cap + 1):
        if abs(w - 1.0) < tol:
            return n
        w *= lam
    return INFINITE_ORDER


def classify(f: Moebius, atol: float = ATOL) -> DiskMapClass:
    """Assign the trichotomy class from fixed-point data.

    Decision quantities (fixed-point modulus against 1, multiplier modulus
    against 1, second-point modulus against 1, imaginary part of the
    parabolic translation parameter against 0) are snapped to the boundary
    within `atol`; values between `atol` and AMBIGUITY_ATOL raise
    AmbiguousClass rather than guessing a side.
    """
    defect = self_map_defect(f)
    if defect is not None:
        raise NotSelfMap(defect)
    if _is_identity(f):
        return DiskMapClass(MapKind.IDENTITY, (), complex(1.0), order=1)
    if f.c == 0 and f.b == 0:
        beta = f.a / f.d
        order = None
        if abs(abs(beta) - 1.0) <= atol:
            order = _unimodular_order(beta)
        return DiskMapClass(MapKind.ROTATION, (complex(0.0), INF), beta, order)

    fps = fixed_points(f)
    if len(fps) == 1:
        p = fps[0].point
        a = cayley_translation(f)
        side = _banded(
            a.imag,
            "parabolic translation parameter Im a",
            MapKind.PARABOLIC_AUTOMORPHISM,
            MapKind.PARABOLIC_NON_AUTOMORPHISM,
            atol,
        )
        kind = (
            MapKind.PARABOLIC_AUTOMORPHISM
            if side <= 0
            else MapKind.PARABOLIC_NON_AUTOMORPHISM
        )
        return DiskMapClass(kind, (p,), a)

    sides = [
        _circle_side(
            fp.point,
            "fixed point modulus",
            MapKind.INTERIOR_ATTRACTIVE,
            MapKind.HYPERBOLIC_NON_AUTOMORPHISM,
            atol,
        )
        for fp in fps
    ]
    if -1 in sides:
        i = sides.index(-1)
        inner_fp, other_fp = fps[i], fps[1 - i]
        lam = inner_fp.multiplier
        gap = 1.0 - abs(lam)
        mside = _banded(
            gap,
            "interior multiplier modulus",
            MapKind.ELLIPTIC_AUTOMORPHISM,
            MapKind.INTERIOR_ATTRACTIVE,
            atol,
        )
        pts = (inner_fp.point, other_fp.point)
        if mside == 0:
            return DiskMapClass(
                MapKind.ELLIPTIC_AUTOMORPHISM, pts, lam, _unimodular_order(lam)
            )
        if mside > 0:
            return DiskMapClass(MapKind.INTERIOR_ATTRACTIVE, pts, lam)
        raise AmbiguousClass(
            f"interior multiplier modulus {abs(lam):.12g} exceeds 1, which is"
            " inconsistent with a disk self-map",
            candidates=(MapKind.ELLIPTIC_AUTOMORPHISM, MapKind.INTERIOR_ATTRACTIVE),
        )

    # no interior fixed point: hyperbolic, attractive point on the circle
    if abs(fps[0].multiplier) <= abs(fps[1].multiplier):
        att, rep = fps
    else:
        rep, att = fps
    if _circle_side(
        att.point,
        "attractive fixed point modulus",
        MapKind.HYPERBOLIC_AUTOMORPHISM,
        MapKind.HYPERBOLIC_NON_AUTOMORPHISM,
        atol,
    ) != 0:
        raise AmbiguousClass(
            "attractive fixed point is not on the unit circle",
            candidates=(
                MapKind.HYPERBOLIC_AUTOMORPHISM,
                MapKind.HYPERBOLIC_NON_AUTOMORPHISM,
            ),
        )
    wside = _circle_side(
        rep.point,
        "second fixed point modulus",
        MapKind.HYPERBOLIC_AUTOMORPHISM,
        MapKind.HYPERBOLIC_NON_AUTOMORPHISM,
        atol,
    )
    kind = (
        MapKind.HYPERBOLIC_AUTOMORPHISM
        if wside == 0
        else MapKind.HYPERBOLIC_NON_AUTOMORPHISM
    )
    return DiskMapClass(kind, (att.point, rep.point), att.multiplier)


def cayley_translation(f: Moebius) -> complex:
    """Translation parameter a of the half-plane model of a parabolic map.

    Rotates the double fixed point to 1, conjugates by the Cayley map and
    reads off a = Phi(w) - w, verified at two sample points.
    """
    try:
        fps = fixed_points(f)
    except IdentityMap as exc:
        raise NotParabolic("the identity is not parabolic") from exc
    if len(fps) != 1:
        raise NotParabolic("map has two distinct fixed points")
    p = fps[0].point
    if is_infinity(p) or abs(abs(p) - 1.0) > 1e-6:
        raise NotParabolic("double fixed point does not lie on the unit circle")
    ft = rotate_symbol(f, -cmath.phase(p))
    big_phi = compose(CAYLEY, compose(ft, CAYLEY_INV))
    w0, w1 = 1j, -0.5 + 2.0j
    a0 = big_phi(w0) - w0
    a1 = big_phi(w1) - w1
    if abs(a0 - a1) > 1e-10:
        raise NotParabolic(
            f"conjugated map is not a translation (drift {abs(a0 - a1):.3e})"
        )
    a = 0.5 * (a0 + a1)
    if a.imag < -1e-10:
        raise NotParabolic("translation parameter points out of the upper half-plane")
    return a


def elliptic_order(f: Moebius, cap: int = ORDER_CAP, tol: float = 1e-9) -> int | float:
    """Smallest n <= cap with the n-fold composite equal to the identity,
    INFINITE_ORDER when none is detected.

    Accepts elliptic automorphisms and unimodular dilations (which are
    elliptic about 0).
    """
    cls = classify(f)
    if cls.kind == MapKind.IDENTITY:
        return 1
    if cls.kind == MapKind.ELLIPTIC_AUTOMORPHISM:
        lam = cls.multiplier
    elif cls.kind == MapKind.ROTATION and abs(abs(cls.multiplier) - 1.0) <= ATOL:
        lam = cls.multiplier
    else:
        raise NotElliptic(f"map of kind {cls.kind.value} has no elliptic order")
    return _unimodular_order(lam, cap, tol)


def standard_rotation_model(f: Moebius) -> tuple[complex, complex]:
    """(alpha, lambda): interior fixed point and its multiplier.

    For an elliptic automorphism, conjugating by the involution at alpha
    turns f into the dilation lambda * z; for attractive maps the pair is
    the conjugating data for the Koenigs construction.
    """
    cls = classify(f)
    if cls.kind == MapKind.IDENTITY:
        return complex(0.0), complex(1.0)
    if cls.kind == MapKind.ROTATION:
        return complex(0.0), cls.multiplier
    if cls.kind in (MapKind.INTERIOR_ATTRACTIVE, MapKind.ELLIPTIC_AUTOMORPHISM):
        return cls.fixed_points[0], cls.multiplier
    raise NoInteriorFixedPoint(f"map of kind {cls.kind.value} fixes no interior point")


# ---------------------------------------------------------------------------
# text format: "a,b,c,d" with complex literals re / re+imi / imi

_COMPLEX_FORBIDDEN = re.compile(r"[jJ]|inf|nan", re.IGNORECASE)


def parse_complex(text: str) -> complex:
    s = text.strip()
    if not s or any(ch.isspace() for ch in s):
        raise ParseError(f"bad complex literal {text!r}")
    if _COMPLEX_FORBIDDEN.search(s):
        raise ParseError(f"bad complex literal {text!r}")
    try:
        z = complex(s.replace("i", "j"))
    except ValueError as exc:
        raise ParseError(f"bad complex literal {text!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"bad complex literal {text!r}")
    return z


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    if z.real == 0:
        return repr(z.imag) + "i"
    sign = "+" if z.imag > 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def parse_moebius(text: str) -> Moebius:
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError(f"expected 'a,b,c,d', got {text!r}")
    return Moebius(*(parse_complex(p) for p in parts))


def format_moebius(f: Moebius) -> str:
    return ",".join(format_complex(z) for z in f.coefficients())
