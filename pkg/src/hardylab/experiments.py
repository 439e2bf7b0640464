"""Named, reproducible experiment runs behind the CLI and the verdict
witnesses.

Every experiment returns a JSON-ready report with the claim it checks,
the thresholds it was judged against, and a pass/fail verdict, so golden
diffs are self-describing.  Reports are deterministic functions of
(params, config).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import conjugations as conj
from . import eigensystems as eig
from . import operators as ops
from .errors import DomainError, UnknownExperiment
from .hardy import lft_coeffs
from .moebius import (
    INFINITE_ORDER,
    Moebius,
    classify,
    MapKind,
    elliptic_order,
    format_moebius,
    involution,
    parse_complex,
    parse_moebius,
    rotation_about,
    standard_rotation_model,
)
from .serialize import complex_to_pair, vec_from_json, vec_to_json

#: Pinned golden thresholds, recorded from verified runs at the default
#: truncation.  Inner-symbol compressions lose an O(1) fraction of the
#: mass of their high columns, so their Frobenius-relative residuals
#: converge slowly in N (roughly N^(-1/2)); the pinned values reflect the
#: measured N = 64 state with ~15% headroom.
PINNED = {
    # symmetry defect of the involution-symbol operator against its
    # polar-factor conjugation, alpha = 0.5 (measured 2.825e-2 at N = 64)
    "jalpha_residual_dim64": 3.2e-2,
    # conjugation axiom residuals of that construction (measured ~2e-14)
    "jalpha_axioms_dim64": 1e-8,
    # degree-two identity defect of the iterate sum, alpha = 0.5
    # (measured 3.81e-2 order 2 and 6.72e-2 order 3 at N = 64)
    "elliptic_sum_dim64": 8e-2,
    # self-commutator floor for the non-normal fixtures
    # (measured 0.198..0.276 for the involution, 0.155..0.158 for z/(2-z))
    "normality_floor": 0.1,
    # canonical-conjugation symmetry defect floor for symbols with no
    # symmetrizing conjugation (measured 0.34 parabolic, 1.38 hyperbolic)
    "csym_canonical_floor": 0.01,
    # off-diagonal bilinear pairing floor for involution-power families
    # (measured 0.539 for alpha = 0.5 at N = 64)
    "c_orthogonality_floor": 1e-3,
    # eigenvalue-equation residuals for the parabolic family at N = 64
    # (measured 1.97e-2 at t = 0.25, 2.9e-3 at 0.5, 1.35e-2 at 1.0)
    "parabolic_eigen_dim64": 3e-2,
    # orbit pairing deviation cap (measured <= 6e-15 on the fixtures)
    "orbit_deviation": 1e-10,
    # cross-method and functional-equation tolerance for the Koenigs data
    # (measured worst gap 2e-9 over the random suite)
    "koenigs_tol": 1e-8,
}

_DIM_MIN, _DIM_MAX = 8, 256


@dataclass(frozen=True)
class RunConfig:
    """Run-wide defaults: truncation, tolerances, output routing."""

    dim: int = 64
    rank_tol: float = 1e-8
    fmt: str = "json"
    seed: int = 0
    out: str | None = None
    csv: str | None = None

    def __post_init__(self):
        if not _DIM_MIN <= self.dim <= _DIM_MAX:
            raise DomainError(f"dim must lie in [{_DIM_MIN}, {_DIM_MAX}], got {self.dim}")
        if self.rank_tol <= 0:
            raise DomainError("tolerances must be positive")


def default_dim() -> int:
    """Default truncation: HARDYLAB_DIM when set, else 64."""
    raw = os.environ.get("HARDYLAB_DIM")
    if raw is None:
        return 64
    try:
        dim = int(raw)
    except ValueError as exc:
        raise DomainError(f"HARDYLAB_DIM={raw!r} is not an integer") from exc
    if not _DIM_MIN <= dim <= _DIM_MAX:
        raise DomainError(f"HARDYLAB_DIM must lie in [{_DIM_MIN}, {_DIM_MAX}]")
    return dim


def _require_map(params) -> Moebius:
    raw = params.get("map")
    if raw is None:
        raise DomainError("experiment needs a 'map' parameter (text form 'a,b,c,d')")
    return raw if isinstance(raw, Moebius) else parse_moebius(str(raw))


def _param_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        return complex(value[0], value[1])
    if isinstance(value, str):
        return parse_complex(value)
    return complex(value)


def _nonincreasing(seq, slack=1e-12) -> bool:
    return all(b <= a + slack for a, b in zip(seq, seq[1:]))


def default_jalpha_parameter(f: Moebius) -> complex:
    """Natural conjugation parameter for a symbol: an order-2 elliptic map
    is the involution at f(0); anything else keys on its interior fixed
    point."""
    cls = classify(f)
    if cls.kind == MapKind.ELLIPTIC_AUTOMORPHISM and cls.order == 2:
        return f(0)
    return standard_rotation_model(f)[0]


def _report(name, claim, params, dim, thresholds, results, passed, extra=None):
    out = {
        "experiment": name,
        "claim": claim,
        "params": params,
        "dim": dim,
        "thresholds": thresholds,
        "results": results,
        "verdict_of_check": "pass" if passed else "fail",
    }
    if extra:
        out.update(extra)
    return out


# ---------------------------------------------------------------------------
# individual experiments

def _exp_jalpha_residual(params, config):
    alpha = _param_complex(params.get("alpha", 0.5))
    dims = [int(d) for d in params.get("dims", [16, 32, 64])]
    residuals = []
    axioms = []
    for dim in dims:
        c = conj.jalpha(alpha, dim)
        t = ops.comp_matrix(involution(alpha), dim)
        residuals.append(conj.csym_residual(t, c))
        axioms.append(max(c.unitarity_residual, c.involution_residual))
    thresholds = {
        "final_below": PINNED["jalpha_residual_dim64"],
        "axioms": PINNED["jalpha_axioms_dim64"],
    }
    checks = [_nonincreasing(residuals), max(axioms) < thresholds["axioms"]]
    if dims[-1] >= 64:
        checks.append(residuals[-1] < thresholds["final_below"])
    results = {
        "alpha": complex_to_pair(alpha),
        "dims": dims,
        "csym_residuals": residuals,
        "axiom_residuals": axioms,
        "decay_ratio_first_to_last": residuals[0] / residuals[-1],
    }
    return _report(
        "jalpha-residual",
        "polar-factor conjugation symmetrizes the involution symbol in the limit",
        params, dims[-1], thresholds, results, all(checks),
    )


def _exp_commutant_dim(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", 16))
    expect = int(params.get("expect", 1))
    rel_tol = float(params.get("rel_tol", config.rank_tol))
    value = ops.commutant_dim(ops.comp_matrix(f, dim), rel_tol)
    thresholds = {"rel_tol": rel_tol, "expect": expect}
    results = {"commutant_dim": value}
    return _report(
        "commutant-dim",
        "joint commutant of the operator and its adjoint is scalars only",
        {**params, "map": format_moebius(f)}, dim, thresholds, results, value == expect,
    )


def _elliptic_symbol(params) -> tuple[Moebius, int]:
    if "map" in params:
        f = _require_map(params)
        order = elliptic_order(f)
        if order == INFINITE_ORDER:
            raise DomainError("map has no detectable finite order")
        return f, int(order)
    alpha = _param_complex(params.get("alpha", 0.5))
    order = int(params.get("order", 2))
    if order == 2:
        return involution(alpha), 2
    lam = complex(math.cos(2 * math.pi / order), math.sin(2 * math.pi / order))
    return rotation_about(alpha, lam), order


def _exp_elliptic_sum(params, config):
    f, order = _elliptic_symbol(params)
    dims = params.get("dims")
    if dims is None:
        dims = [int(params.get("dim", config.dim))]
    dims = [int(d) for d in dims]
    residuals = [ops.elliptic_sum(f, dim).residual for dim in dims]
    # each summed iterate contributes its own truncation escape, so the
    # pinned bound (calibrated at orders 2-3) scales with the term count
    bound = PINNED["elliptic_sum_dim64"] * max(1.0, (order - 1) / 2.0)
    thresholds = {"final_below": bound}
    checks = [_nonincreasing(residuals)]
    if dims[-1] >= 64:
        checks.append(residuals[-1] < thresholds["final_below"])
    results = {"map": format_moebius(f), "order": order, "dims": dims,
               "residuals": residuals}
    return _report(
        "elliptic-sum",
        "iterate sum of a finite-order map satisfies the degree-two identity",
        params, dims[-1], thresholds, results, all(checks),
    )


def _exp_parabolic_gram(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", config.dim))
    if "grid" in params:
        grid = [float(t) for t in params["grid"]]
    else:
        step = float(params.get("grid_step", 0.125))
        count = int(params.get("grid_count", 32))
        grid = [step * n for n in range(1, count + 1)]
    target = float(params.get("target", 0.0625))
    report = eig.gram_minimality_experiment(f, grid, target, dim)
    distances = list(report.distances)
    # computed distances carry an absolute least-squares noise floor around
    # 1e-7 once the family is numerically complete; monotonicity is asserted
    # with slack above that floor
    passed = _nonincreasing(distances, slack=1e-6) and distances[-1] < 0.5 * distances[0]
    thresholds = {"final_vs_first": 0.5, "monotone_slack": 1e-6}
    results = {
        "map": format_moebius(f),
        "t_grid": list(report.t_grid),
        "t_target": report.t_target,
        "distances": distances,
        "gram_sigma_min": list(report.gram_sigma_min),
        "interpretation": report.interpretation,
    }
    csv_rows = [
        ("m", "distance", "gram_sigma_min"),
        *[
            (m + 1, d, s)
            for m, (d, s) in enumerate(zip(report.distances, report.gram_sigma_min))
        ],
    ]
    return _report(
        "parabolic-gram",
        "held-out eigenfamily member is approximately in the span of the rest",
        params, dim, thresholds, results, passed, extra={"_csv": csv_rows},
    )


def _exp_spectrum_spiral(params, config):
    f = _require_map(params)
    tmax = float(params.get("tmax", 6.0))
    steps = int(params.get("steps", 100))
    grid = [tmax * k / (steps - 1) for k in range(steps)] if steps > 1 else [0.0]
    values = eig.spectrum_spiral(f, grid)
    moduli = [abs(v) for v in values]
    passed = all(b < a for a, b in zip(moduli, moduli[1:])) and all(m <= 1 + 1e-12 for m in moduli)
    results = {
        "map": format_moebius(f),
        "t": grid,
        "eigenvalues": [complex_to_pair(v) for v in values],
        "moduli": moduli,
    }
    csv_rows = [("t", "re_eig", "im_eig"),
                *[(t, v.real, v.imag) for t, v in zip(grid, values)]]
    return _report(
        "spectrum-spiral",
        "parabolic eigenvalues spiral strictly into the origin",
        params, None, {"moduli_max": 1.0}, results, passed, extra={"_csv": csv_rows},
    )


def _exp_koenigs_check(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", config.dim))
    kd = eig.koenigs(f, dim, cross_check=True)
    iterated = eig._koenigs_iterate(f, kd.alpha, kd.multiplier, dim)
    head = slice(0, max(1, dim // 2))
    gap = float(np.max(np.abs(kd.kappa[head] - iterated[head])))
    grid_res = eig.schroeder_grid_residual(kd.kappa_map, f, kd.multiplier)
    tol = PINNED["koenigs_tol"]
    passed = gap < tol and grid_res < tol
    results = {
        "map": format_moebius(f),
        "alpha": complex_to_pair(kd.alpha),
        "multiplier": complex_to_pair(kd.multiplier),
        "method_agreement": gap,
        "grid_residual": grid_res,
        "kappa_head": vec_to_json(kd.kappa[:8]),
    }
    return _report(
        "koenigs-check",
        "closed form and iteration agree on the interior eigenfunction",
        params, dim, {"tol": tol}, results, passed,
    )


def _exp_orbit_test(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", config.dim))
    n_max = int(params.get("n_max", 50))
    if "sample" in params:
        sample = vec_from_json(params["sample"])
    else:
        sample = np.zeros(dim, dtype=np.complex128)
        sample[0] = 1.0
        sample[1] = 1.0
    report = ops.orbit_projection_test(f, sample, n_max)
    cap = PINNED["orbit_deviation"]
    results = {
        "map": format_moebius(f),
        "fixed_point": complex_to_pair(report.fixed_point),
        "expected": complex_to_pair(report.expected),
        "max_deviation": report.max_deviation,
        "n_max": report.n_max,
        "conclusion": report.conclusion,
    }
    return _report(
        "orbit-test",
        "orbit pairings against the fixed-point kernel stay constant",
        params, dim, {"deviation_below": cap}, results,
        report.max_deviation < cap,
    )


def _exp_normality_residual(params, config):
    f = _require_map(params)
    dims = [int(d) for d in params.get("dims", [32, 64])]
    expect = params.get("expect")
    if expect is None:
        kind = classify(f).kind
        expect = "zero" if kind in (MapKind.ROTATION, MapKind.IDENTITY) else "positive"
    residuals = [ops.normality_residual(ops.comp_matrix(f, dim)) for dim in dims]
    floor = PINNED["normality_floor"]
    if expect == "zero":
        passed = all(r <= 1e-15 for r in residuals)
    else:
        passed = all(r > floor for r in residuals)
    results = {"map": format_moebius(f), "dims": dims, "residuals": residuals,
               "expect": expect}
    return _report(
        "normality-residual",
        "self-commutator vanishes exactly for dilations and stays bounded away"
        " from zero otherwise",
        params, dims[-1], {"floor": floor}, results, passed,
    )


def _exp_c_orthogonality(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", config.dim))
    n_powers = int(params.get("n_powers", 8))
    alpha, _ = standard_rotation_model(f)
    which = params.get("conjugation", "jalpha")
    if which == "jalpha":
        c = conj.jalpha(alpha, dim)
    else:
        c = conj.canonical(dim)
    base = lft_coeffs(involution(alpha), dim)
    family = [np.zeros(dim, dtype=np.complex128)]
    family[0][0] = 1.0
    for _ in range(n_powers - 1):
        family.append(np.convolve(family[-1], base)[:dim])
    b = conj.c_orthogonality_matrix(family, c)
    off = conj.max_offdiagonal(b)
    floor = PINNED["c_orthogonality_floor"]
    results = {
        "map": format_moebius(f),
        "alpha": complex_to_pair(alpha),
        "conjugation": c.kind,
        "n_powers": n_powers,
        "max_offdiagonal": off,
    }
    return _report(
        "c-orthogonality",
        "involution-power family is not orthogonal for the bilinear pairing",
        params, dim, {"offdiagonal_above": floor}, results, off > floor,
    )


def _exp_csym_residual(params, config):
    f = _require_map(params)
    dim = int(params.get("dim", config.dim))
    which = params.get("conjugation", "canonical")
    if which == "jalpha":
        alpha = _param_complex(params["alpha"]) if "alpha" in params else default_jalpha_parameter(f)
        c = conj.jalpha(alpha, dim)
    elif which == "rotation":
        c = conj.rotation_conjugation(float(params.get("theta", 0.0)), dim)
    else:
        c = conj.canonical(dim)
    residual = conj.csym_residual(ops.comp_matrix(f, dim), c)
    expect = params.get("expect", "above-floor")
    floor = PINNED["csym_canonical_floor"]
    if expect == "above-floor":
        passed = residual > floor
        thresholds = {"floor": floor}
    else:
        bound = float(params.get("below", PINNED["jalpha_residual_dim64"]))
        passed = residual < bound
        thresholds = {"below": bound}
    results = {"map": format_moebius(f), "conjugation": c.kind, "residual": residual,
               "expect": expect}
    return _report(
        "csym-residual",
        "symmetry defect of the compression against a chosen conjugation",
        params, dim, thresholds, results, passed,
    )


EXPERIMENTS = {
    "jalpha-residual": _exp_jalpha_residual,
    "commutant-dim": _exp_commutant_dim,
    "elliptic-sum": _exp_elliptic_sum,
    "parabolic-gram": _exp_parabolic_gram,
    "spectrum-spiral": _exp_spectrum_spiral,
    "koenigs-check": _exp_koenigs_check,
    "orbit-test": _exp_orbit_test,
    "normality-residual": _exp_normality_residual,
    "c-orthogonality": _exp_c_orthogonality,
    "csym-residual": _exp_csym_residual,
}


def run_experiment(name: str, params: dict | None = None,
                   config: RunConfig | None = None) -> dict:
    """Dispatch an experiment by name; returns its JSON-ready report.

    The per-experiment CSV payload, when present, sits under the '_csv'
    key as a list of rows (header first) and is stripped by the CLI before
    printing the JSON body.
    """
    if name not in EXPERIMENTS:
        raise UnknownExperiment(
            f"unknown experiment {name!r}; known: {', '.join(sorted(EXPERIMENTS))}"
        )
    return EXPERIMENTS[name](dict(params or {}), config or RunConfig())
