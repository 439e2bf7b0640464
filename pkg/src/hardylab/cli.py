"""Command-line front end.

Subcommands: classify, verdict, matrix, csym, koenigs, experiment.  Maps
are given in the text form "a,b,c,d" with complex literals written as
`re`, `re+imi`, `re-imi` or `imi` (whitespace-free), e.g. `1,1,-1,3` for
(z+1)/(3-z).

Exit codes: 0 ok, 1 usage or parse error, 2 violated precondition,
3 ambiguous classification.  Reports are byte-identical across runs for
identical inputs.  The HARDYLAB_DIM environment variable overrides the
default truncation; explicit flags override the environment.
"""

from __future__ import annotations

import argparse
import csv as _csv
import json
import sys

import numpy as np

from . import conjugations as conj
from . import eigensystems as eig
from . import operators as ops
from .errors import AmbiguousClass, DomainError, HardyLabError, ParseError, UnknownExperiment
from .experiments import EXPERIMENTS, RunConfig, default_dim, run_experiment
from .moebius import classify, parse_moebius
from .serialize import (
    classification_to_json,
    complex_to_pair,
    opmatrix_to_json,
    vec_to_json,
    verdict_to_json,
)
from .verdict import decide

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_AMBIGUOUS = 3


def _dump(payload: dict, pretty: bool) -> str:
    if pretty:
        return json.dumps(payload, sort_keys=True, indent=2)
    return json.dumps(payload, sort_keys=True)


def _emit(payload: dict, args) -> None:
    text = _dump(payload, getattr(args, "pretty", False)) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _write_csv(path: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv.writer(fh, lineterminator="\n")
        writer.writerows(rows)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, default=None,
                   help="truncation dimension (default: HARDYLAB_DIM or 64)")
    p.add_argument("--out", help="write the JSON report to this path as well")
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardylab",
        description="classification and complex-symmetry diagnostics for"
        " linear fractional composition operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="fixed-point trichotomy of a symbol")
    p.add_argument("map", help="symbol as 'a,b,c,d'")
    _add_common(p)

    p = sub.add_parser("verdict", help="complex-symmetry verdict with witnesses")
    p.add_argument("map")
    _add_common(p)

    p = sub.add_parser("matrix", help="compression matrix of the composition operator")
    p.add_argument("map")
    p.add_argument("--csv", help="write the singular values to this CSV path")
    _add_common(p)

    p = sub.add_parser("csym", help="symmetry defect against a conjugation")
    p.add_argument("map")
    p.add_argument("--conjugation", default="canonical",
                   choices=["canonical", "rotation", "jalpha"])
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--alpha", default=None,
                   help="jalpha parameter (complex literal; defaults to f(0) for an"
                        " order-2 symbol, else the interior fixed point)")
    _add_common(p)

    p = sub.add_parser("koenigs", help="interior eigenfunction data")
    p.add_argument("map")
    _add_common(p)

    p = sub.add_parser("experiment", help="run a named experiment")
    p.add_argument("name", help=f"one of: {', '.join(sorted(EXPERIMENTS))}")
    p.add_argument("--map")
    p.add_argument("--alpha")
    p.add_argument("--order", type=int)
    p.add_argument("--dims", help="comma-separated truncation sweep, e.g. 16,32,64")
    p.add_argument("--tmax", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--target", type=float)
    p.add_argument("--grid-step", type=float)
    p.add_argument("--grid-count", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--n-powers", type=int)
    p.add_argument("--expect")
    p.add_argument("--conjugation")
    p.add_argument("--rel-tol", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write the tabular payload to this CSV path")
    _add_common(p)

    return parser


def _resolve_dim(args) -> int:
    return args.dim if args.dim is not None else default_dim()


def _cmd_classify(args) -> int:
    cls = classify(parse_moebius(args.map))
    _emit({"input": args.map, **classification_to_json(cls)}, args)
    return EXIT_OK


def _cmd_verdict(args) -> int:
    v = decide(parse_moebius(args.map))
    _emit(verdict_to_json(v, args.map), args)
    return EXIT_OK


def _cmd_matrix(args) -> int:
    t = ops.comp_matrix(parse_moebius(args.map), _resolve_dim(args))
    if args.csv:
        sigma = np.linalg.svd(t.mat, compute_uv=False)
        _write_csv(args.csv, [("sigma",), *[(float(s),) for s in sigma]])
    _emit({"input": args.map, **opmatrix_to_json(t)}, args)
    return EXIT_OK


def _cmd_csym(args) -> int:
    f = parse_moebius(args.map)
    dim = _resolve_dim(args)
    params = {"map": args.map, "conjugation": args.conjugation, "dim": dim,
              "theta": args.theta}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.conjugation == "jalpha":
        from .experiments import default_jalpha_parameter
        from .moebius import parse_complex

        alpha = parse_complex(args.alpha) if args.alpha else default_jalpha_parameter(f)
        c = conj.jalpha(alpha, dim)
    elif args.conjugation == "rotation":
        c = conj.rotation_conjugation(args.theta, dim)
    else:
        c = conj.canonical(dim)
    residual = conj.csym_residual(ops.comp_matrix(f, dim), c)
    _emit({"input": args.map, "dim": dim, "conjugation": c.kind,
           "residual": residual}, args)
    return EXIT_OK


def _cmd_koenigs(args) -> int:
    f = parse_moebius(args.map)
    dim = _resolve_dim(args)
    kd = eig.koenigs(f, dim)
    payload = {
        "input": args.map,
        "dim": dim,
        "alpha": complex_to_pair(kd.alpha),
        "multiplier": complex_to_pair(kd.multiplier),
        "method": kd.method,
        "grid_residual": eig.schroeder_grid_residual(kd.kappa_map, f, kd.multiplier),
        "kappa": vec_to_json(kd.kappa),
    }
    _emit(payload, args)
    return EXIT_OK


def _cmd_experiment(args) -> int:
    params: dict = {}
    if args.map is not None:
        params["map"] = args.map
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.order is not None:
        params["order"] = args.order
    if args.dims is not None:
        params["dims"] = [int(d) for d in args.dims.split(",") if d]
    if args.dim is not None:
        params["dim"] = args.dim
    if args.tmax is not None:
        params["tmax"] = args.tmax
    if args.steps is not None:
        params["steps"] = args.steps
    if args.target is not None:
        params["target"] = args.target
    if args.grid_step is not None:
        params["grid_step"] = args.grid_step
    if args.grid_count is not None:
        params["grid_count"] = args.grid_count
    if args.n_max is not None:
        params["n_max"] = args.n_max
    if args.n_powers is not None:
        params["n_powers"] = args.n_powers
    if args.expect is not None:
        params["expect"] = args.expect
    if args.conjugation is not None:
        params["conjugation"] = args.conjugation
    if args.rel_tol is not None:
        params["rel_tol"] = args.rel_tol

    config = RunConfig(dim=args.dim if args.dim is not None else default_dim(),
                       seed=args.seed)
    report = run_experiment(args.name, params, config)
    rows = report.pop("_csv", None)
    if args.csv and rows:
        _write_csv(args.csv, rows)
    report["seed"] = args.seed
    _emit(report, args)
    return EXIT_OK


_HANDLERS = {
    "classify": _cmd_classify,
    "verdict": _cmd_verdict,
    "matrix": _cmd_matrix,
    "csym": _cmd_csym,
    "koenigs": _cmd_koenigs,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize to the usage code
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, UnknownExperiment) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AmbiguousClass as exc:
        print(f"ambiguous: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except HardyLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
