"""Numerical toolkit for linear fractional composition operators on the
Hardy space: symbol classification, truncated operator matrices, explicit
conjugations, eigenfunction families, and a complex-symmetry verdict."""

from .errors import (
    AmbiguousClass,
    DimensionMismatch,
    DomainError,
    HardyLabError,
    NotSelfMap,
    ParseError,
)
from .hardy import DEFAULT_DIM, cauchy_product, evaluate, inner, kernel, lft_coeffs, series_exp
from .moebius import (
    DiskMapClass,
    MapKind,
    Moebius,
    cayley_translation,
    classify,
    compose,
    elliptic_order,
    fixed_points,
    format_moebius,
    from_halfplane_translation,
    identity,
    inverse,
    involution,
    is_self_map,
    parse_moebius,
    rotate_symbol,
    rotation,
    rotation_about,
    standard_rotation_model,
)
from .numerics import null_space_dim, polar_unitary, span_distance
from .operators import (
    OpMatrix,
    adjoint,
    apply,
    comp_matrix,
    commutant_dim,
    elliptic_sum,
    normality_residual,
    orbit_projection_test,
)
from .conjugations import (
    Conjugation,
    bilinear,
    build_conjugation,
    c_orthogonality_matrix,
    canonical,
    csym_residual,
    jalpha,
    rotation_conjugation,
)
from .eigensystems import (
    KoenigsData,
    ParabolicEigenData,
    gram_minimality_experiment,
    koenigs,
    koenigs_powers,
    parabolic_eigen_residual,
    psi_t,
    spectrum_spiral,
)
from .verdict import CSVerdict, Witness, decide
from .experiments import RunConfig, run_experiment

__version__ = "0.1.0"

__all__ = [
    "AmbiguousClass",
    "CSVerdict",
    "Conjugation",
    "DEFAULT_DIM",
    "DimensionMismatch",
    "DiskMapClass",
    "DomainError",
    "HardyLabError",
    "KoenigsData",
    "MapKind",
    "Moebius",
    "NotSelfMap",
    "OpMatrix",
    "ParabolicEigenData",
    "ParseError",
    "RunConfig",
    "Witness",
    "adjoint",
    "apply",
    "bilinear",
    "build_conjugation",
    "c_orthogonality_matrix",
    "canonical",
    "cauchy_product",
    "cayley_translation",
    "classify",
    "comp_matrix",
    "commutant_dim",
    "compose",
    "csym_residual",
    "decide",
    "elliptic_order",
    "elliptic_sum",
    "evaluate",
    "fixed_points",
    "format_moebius",
    "from_halfplane_translation",
    "gram_minimality_experiment",
    "identity",
    "inner",
    "inverse",
    "involution",
    "is_self_map",
    "jalpha",
    "kernel",
    "koenigs",
    "koenigs_powers",
    "lft_coeffs",
    "normality_residual",
    "null_space_dim",
    "orbit_projection_test",
    "parabolic_eigen_residual",
    "parse_moebius",
    "polar_unitary",
    "psi_t",
    "rotate_symbol",
    "rotation",
    "rotation_about",
    "rotation_conjugation",
    "run_experiment",
    "series_exp",
    "span_distance",
    "spectrum_spiral",
    "standard_rotation_model",
]
