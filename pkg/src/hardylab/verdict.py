"""Decision procedure: does a symbol admit a symmetrizing conjugation?

Decision table, keyed on the classification kind:

    Identity, Rotation (dilations b z)   -> ComplexSymmetricNormal
    InteriorAttractive                   -> NotComplexSymmetric
    Hyperbolic (either), ParabolicAuto   -> NotComplexSymmetric
    ParabolicNonAutomorphism             -> NotComplexSymmetric
    Elliptic, infinite order             -> NotComplexSymmetric
    Elliptic, order 2                    -> ComplexSymmetricOrderTwo
    Elliptic, finite order >= 3          -> UndeterminedFiniteOrder

The last row is an honest verdict: the degree-two identity only certifies
the symmetry of the iterate sum, and cardinality bounds do not decide
individual maps, so the tool must not overclaim either way.  Each verdict
carries executable witnesses (experiment name plus parameters) whose
qualitative outcome backs the verdict at the default truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HardyLabError
from .moebius import (
    INFINITE_ORDER,
    DiskMapClass,
    MapKind,
    Moebius,
    classify,
    format_moebius,
)

COMPLEX_SYMMETRIC_NORMAL = "ComplexSymmetricNormal"
COMPLEX_SYMMETRIC_ORDER_TWO = "ComplexSymmetricOrderTwo"
NOT_COMPLEX_SYMMETRIC = "NotComplexSymmetric"
UNDETERMINED_FINITE_ORDER = "UndeterminedFiniteOrder"


@dataclass(frozen=True)
class Witness:
    """A runnable numeric check: experiment name, parameters, and the
    qualitative outcome that supports the verdict."""

    op: str
    params: dict
    expectation: str


@dataclass(frozen=True)
class CSVerdict:
    classification: DiskMapClass
    verdict: str
    theorem: str
    witnesses: tuple[Witness, ...]


def _map_text(f: Moebius) -> str:
    return format_moebius(f)


def decide(f: Moebius) -> CSVerdict:
    """Emit the symmetry verdict with supporting witnesses.

    Propagates NotSelfMap and AmbiguousClass from the classifier.
    """
    cls = classify(f)
    text = _map_text(f)
    kind = cls.kind

    if kind in (MapKind.IDENTITY, MapKind.ROTATION):
        witnesses = (
            Witness(
                op="normality-residual",
                params={"map": text, "dims": [32, 64], "expect": "zero"},
                expectation="self-commutator residual at machine zero",
            ),
        )
        return CSVerdict(cls, COMPLEX_SYMMETRIC_NORMAL,
                         "normal-dilation-characterization", witnesses)

    if kind == MapKind.INTERIOR_ATTRACTIVE:
        witnesses = (
            Witness(
                op="normality-residual",
                params={"map": text, "dims": [32, 64], "expect": "positive"},
                expectation="self-commutator residual above the pinned floor",
            ),
            Witness(
                op="orbit-test",
                params={"map": text, "n_max": 50},
                expectation="orbit pairings constant to 1e-10 (point spectrum obstruction)",
            ),
        )
        return CSVerdict(cls, NOT_COMPLEX_SYMMETRIC,
                         "interior-fixed-point-normality-dichotomy", witnesses)

    if kind in (
        MapKind.HYPERBOLIC_AUTOMORPHISM,
        MapKind.HYPERBOLIC_NON_AUTOMORPHISM,
        MapKind.PARABOLIC_AUTOMORPHISM,
    ):
        witnesses = (
            Witness(
                op="csym-residual",
                params={"map": text, "conjugation": "canonical", "dim": 32,
                        "expect": "above-floor"},
                expectation="canonical-conjugation symmetry defect above 0.01",
            ),
        )
        return CSVerdict(cls, NOT_COMPLEX_SYMMETRIC,
                         "hypercyclicity-obstruction", witnesses)

    if kind == MapKind.PARABOLIC_NON_AUTOMORPHISM:
        witnesses = (
            Witness(
                op="parabolic-gram",
                params={"map": text, "grid_step": 0.125, "grid_count": 32,
                        "target": 0.0625, "dim": 64},
                expectation="span distances nonincreasing, final below half the first",
            ),
            Witness(
                op="csym-residual",
                params={"map": text, "conjugation": "canonical", "dim": 32,
                        "expect": "above-floor"},
                expectation="canonical-conjugation symmetry defect above 0.01",
            ),
        )
        return CSVerdict(cls, NOT_COMPLEX_SYMMETRIC,
                         "eigenfamily-completeness-vs-minimality", witnesses)

    if kind == MapKind.ELLIPTIC_AUTOMORPHISM:
        order = cls.order
        if order == INFINITE_ORDER:
            witnesses = (
                Witness(
                    op="c-orthogonality",
                    params={"map": text, "n_powers": 8, "conjugation": "jalpha",
                            "dim": 64},
                    expectation="involution-power family has off-diagonal pairings above 1e-3",
                ),
            )
            return CSVerdict(cls, NOT_COMPLEX_SYMMETRIC,
                             "infinite-order-elliptic-exclusion", witnesses)
        if order == 2:
            # an order-2 elliptic automorphism is the involution at a = f(0)
            alpha = f(0)
            witnesses = (
                Witness(
                    op="jalpha-residual",
                    params={"alpha": [alpha.real, alpha.imag], "dims": [16, 32, 64]},
                    expectation="symmetry residual decays with dimension, below pinned threshold at 64",
                ),
                Witness(
                    op="elliptic-sum",
                    params={"map": text, "order": 2, "dims": [16, 64]},
                    expectation="degree-two identity residual small and decaying",
                ),
                Witness(
                    op="commutant-dim",
                    params={"map": text, "dim": 16, "expect": 1},
                    expectation="joint commutant is scalars only (conjugation unique up to phase)",
                ),
            )
            return CSVerdict(cls, COMPLEX_SYMMETRIC_ORDER_TWO,
                             "involution-polar-conjugation", witnesses)
        witnesses = (
            Witness(
                op="elliptic-sum",
                params={"map": text, "order": int(order), "dims": [16, 64]},
                expectation="iterate-sum satisfies the degree-two identity; single operator undecided",
            ),
        )
        return CSVerdict(cls, UNDETERMINED_FINITE_ORDER,
                         "finite-order-cardinality-bound", witnesses)

    raise HardyLabError(f"unhandled classification kind {kind!r}")
