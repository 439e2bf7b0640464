"""JSON-facing converters for the wire formats used by the CLI.

Complex scalars travel as [re, im] pairs, coefficient vectors as arrays of
pairs, matrices as row-major lists of pairs.  Floats are emitted through
json's repr path, so values round-trip bit-exactly.
"""

from __future__ import annotations

import math

import numpy as np

from .conjugations import Conjugation
from .moebius import DiskMapClass, Moebius, format_moebius, is_infinity
from .operators import OpMatrix
from .verdict import CSVerdict


def complex_to_pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair) -> complex:
    return complex(pair[0], pair[1])


def sphere_point(z):
    """Complex pair, or the string 'inf' for the point at infinity."""
    return "inf" if is_infinity(z) else complex_to_pair(z)


def vec_to_json(v) -> list[list[float]]:
    return [complex_to_pair(z) for z in np.asarray(v, dtype=complex)]


def vec_from_json(items) -> np.ndarray:
    return np.array([pair_to_complex(p) for p in items], dtype=np.complex128)


def mat_to_json(m) -> list[list[float]]:
    """Row-major flat list of [re, im] pairs."""
    a = np.asarray(m, dtype=complex)
    return [complex_to_pair(z) for z in a.reshape(-1)]


def mat_from_json(entries, dim: int) -> np.ndarray:
    flat = np.array([pair_to_complex(p) for p in entries], dtype=np.complex128)
    return flat.reshape(dim, dim)


def order_to_json(order):
    if order is None:
        return None
    if order == math.inf:
        return "infinite"
    return int(order)


def classification_to_json(cls: DiskMapClass) -> dict:
    return {
        "kind": cls.kind.value,
        "fixed_points": [sphere_point(p) for p in cls.fixed_points],
        "multiplier": complex_to_pair(cls.multiplier),
        "order": order_to_json(cls.order),
    }


def opmatrix_to_json(t: OpMatrix) -> dict:
    return {
        "dim": t.dim,
        "symbol": format_moebius(t.symbol) if t.symbol is not None else None,
        "entries": mat_to_json(t.mat),
    }


def conjugation_to_json(c: Conjugation) -> dict:
    params = {
        k: (complex_to_pair(v) if isinstance(v, complex) else v)
        for k, v in c.params.items()
    }
    return {
        "kind": c.kind,
        "params": params,
        "dim": c.dim,
        "entries": mat_to_json(c.u),
        "unitarity_residual": c.unitarity_residual,
        "involution_residual": c.involution_residual,
    }


def conjugation_from_json(data: dict) -> Conjugation:
    params = {
        k: (pair_to_complex(v) if isinstance(v, list) else v)
        for k, v in data["params"].items()
    }
    return Conjugation(
        u=mat_from_json(data["entries"], data["dim"]),
        kind=data["kind"],
        params=params,
        unitarity_residual=data["unitarity_residual"],
        involution_residual=data["involution_residual"],
    )


def verdict_to_json(v: CSVerdict, map_text: str) -> dict:
    return {
        "input": map_text,
        "classification": classification_to_json(v.classification),
        "verdict": v.verdict,
        "theorem": v.theorem,
        "witnesses": [
            {"op": w.op, "params": w.params, "expectation": w.expectation}
            for w in v.witnesses
        ],
    }


def moebius_to_json(f: Moebius) -> str:
    return format_moebius(f)
