"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError and UnknownExperiment are
usage errors (exit 1), DomainError covers violated preconditions (exit 2),
and AmbiguousClass signals a classification that falls inside a tolerance
band and must not be guessed (exit 3).
"""


class HardyLabError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HardyLabError):
    """Malformed textual input (complex literals, map strings)."""


class UnknownExperiment(HardyLabError):
    """Experiment name not known to the runner."""


class DomainError(HardyLabError):
    """A documented precondition was violated."""


class AmbiguousClass(HardyLabError):
    """A decision quantity fell inside the tolerance band around a class
    boundary.  Carries both candidate kinds instead of guessing."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class DimensionMismatch(DomainError):
    """Operands do not share the required dimensions."""


class SingularInput(DomainError):
    """Matrix is numerically singular where invertibility is required."""


class NoConvergence(DomainError):
    """An iteration exhausted its budget without meeting its tolerance."""


class DegenerateResult(DomainError):
    """Coefficients describe a constant (non-invertible) fractional map."""


class IdentityMap(DomainError):
    """Operation undefined for the identity map."""


class NotSelfMap(DomainError):
    """Map does not send the closed unit disk into itself."""


class NotParabolic(DomainError):
    """Map is not parabolic (no double boundary fixed point)."""


class NotParabolicNonAutomorphism(NotParabolic):
    """Map is parabolic but an automorphism (real translation parameter)."""


class NotElliptic(DomainError):
    """Map is not an elliptic automorphism (or unimodular dilation)."""


class NotFiniteOrderElliptic(NotElliptic):
    """Elliptic map has no detectable finite order >= 2."""


class NoInteriorFixedPoint(DomainError):
    """Map has no fixed point inside the open disk."""


class MultiplierNotAttractive(DomainError):
    """Interior multiplier is not strictly inside the punctured unit disk."""


class PointOutsideDisk(DomainError):
    """Kernel node lies outside the open unit disk."""


class NegativeParameter(DomainError):
    """Parameter required to be nonnegative (t >= 0, Im a >= 0)."""


class TargetInGrid(DomainError):
    """Target parameter coincides with a grid node."""


class AlphaOutOfRange(DomainError):
    """Conjugation parameter alpha must satisfy 0 < |alpha| < 1."""


class PolarFailure(DomainError):
    """Polar factor construction failed or violated the conjugation axioms."""
