"""JSON schemas shared by the CLI and the tests.

Scalars travel as canonical text ("-inf", "+inf", lowest-terms "p/q",
"eps"/"e" for Boolean); vectors as arrays of scalar texts; matrices as
arrays of row arrays.  A top-level "semiring" field selects the instance.
Output is always canonically serialised: sorted keys, compact separators,
trailing newline.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import MismatchError, SchemaError
from .fenchel import GridFunction, SlopeSet
from .freemod import GeneratingFamily, Matrix, Vector
from .semiring import (
    Phi,
    Scalar,
    SemiringId,
    make_phi,
    matrix_semiring,
    scalar_from_text,
    scalar_to_text,
)

_NAMES = {"rmax": SemiringId("rmax"), "bool": SemiringId("bool"), "nmax": SemiringId("nmax")}


def parse_semiring(tag) -> SemiringId:
    if not isinstance(tag, str):
        raise SchemaError(f"semiring tag must be a string, got {tag!r}")
    if tag in _NAMES:
        return _NAMES[tag]
    if tag.startswith("mat") and tag[3:].isdigit():
        return matrix_semiring(int(tag[3:]))
    raise SchemaError(f"unknown semiring tag {tag!r}")


def semiring_tag(sr: SemiringId) -> str:
    return str(sr)


def scalar_from_json(sr: SemiringId, obj) -> Scalar:
    if isinstance(obj, bool):
        raise SchemaError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        obj = str(obj)
    if isinstance(obj, str):
        return scalar_from_text(sr, obj)
    if sr.name == "mat" and isinstance(obj, list):
        from .semiring import RMAX, mat_of

        if len(obj) != sr.dim or any(not isinstance(r, list) or len(r) != sr.dim for r in obj):
            raise MismatchError(f"matrix scalar must be {sr.dim}x{sr.dim}")
        return mat_of([[scalar_from_json(RMAX, e) for e in r] for r in obj])
    raise SchemaError(f"not a scalar: {obj!r}")


def scalar_json(s: Scalar):
    if s.kind == "mat":
        return [[scalar_to_text(e) for e in row] for row in s.entries]
    return scalar_to_text(s)


def vector_from_json(sr: SemiringId, obj, dim: int | None = None) -> Vector:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"vector must be a nonempty array, got {obj!r}")
    v = Vector(sr, tuple(scalar_from_json(sr, e) for e in obj))
    if dim is not None and v.dim != dim:
        raise MismatchError(f"expected dimension {dim}, got {v.dim}")
    return v


def vector_json(v) -> list:
    return [scalar_json(s) for s in v.entries]


def matrix_from_json(sr: SemiringId, obj) -> Matrix:
    if not isinstance(obj, list) or not obj or any(not isinstance(r, list) for r in obj):
        raise SchemaError(f"matrix must be an array of row arrays, got {obj!r}")
    width = len(obj[0])
    if any(len(r) != width for r in obj):
        raise MismatchError("ragged matrix rows")
    return Matrix(sr, tuple(tuple(scalar_from_json(sr, e) for e in row) for row in obj))


def matrix_json(m: Matrix) -> list:
    return [[scalar_json(s) for s in row] for row in m.entries]


def family_from_json(sr: SemiringId, obj, point_dim: int | None = None) -> GeneratingFamily:
    if not isinstance(obj, list):
        raise SchemaError(f"generating family must be an array, got {obj!r}")
    vecs = tuple(vector_from_json(sr, g) for g in obj)
    if vecs:
        dim = vecs[0].dim
        if any(v.dim != dim for v in vecs):
            raise MismatchError("generators of unequal dimension")
    elif point_dim is not None:
        dim = point_dim
    else:
        raise SchemaError("empty family needs a point to fix the dimension")
    if point_dim is not None and dim != point_dim:
        raise MismatchError(f"generators of dim {dim} against point of dim {point_dim}")
    return GeneratingFamily(sr, dim, vecs)


def rational_from_json(obj) -> Fraction | int:
    if isinstance(obj, bool):
        raise SchemaError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        try:
            q = Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {obj!r}") from exc
        return int(q) if q.denominator == 1 else q
    raise SchemaError(f"not a rational: {obj!r}")


def rational_json(q) -> str:
    return str(q)


def grid_from_json(obj) -> GridFunction:
    from .semiring import RMAX

    if not isinstance(obj, dict) or "points" not in obj or "values" not in obj:
        raise SchemaError('grid function needs {"points": [...], "values": [...]}')
    pts = obj["points"]
    vals = obj["values"]
    if not isinstance(pts, list) or not isinstance(vals, list):
        raise SchemaError("grid points and values must be arrays")
    if len(pts) != len(vals):
        raise MismatchError("grid points and values of different lengths")
    return GridFunction(
        tuple(rational_from_json(p) for p in pts),
        tuple(scalar_from_json(RMAX, v) for v in vals),
    )


def grid_json(g: GridFunction) -> dict:
    return {
        "points": [rational_json(p) for p in g.points],
        "values": [scalar_json(v) for v in g.values],
    }


def slopes_from_json(obj) -> SlopeSet:
    if not isinstance(obj, list):
        raise SchemaError("slopes must be an array")
    return SlopeSet(tuple(rational_from_json(s) for s in obj))


@dataclass
class Problem:
    semiring: SemiringId
    phi: Phi
    generators: GeneratingFamily | None = None
    convex: GeneratingFamily | None = None
    point: Vector | None = None
    point2: Vector | None = None
    matrix: Matrix | None = None
    bracket: str = "canonical"
    grid: GridFunction | None = None
    slopes: SlopeSet | None = None


_PROBLEM_KEYS = {
    "semiring",
    "phi",
    "generators",
    "convex",
    "point",
    "point2",
    "matrix",
    "bracket",
    "grid",
    "slopes",
}


def problem_from_json(obj, semiring_override: str | None = None, phi_override: str | None = None) -> Problem:
    if not isinstance(obj, dict):
        raise SchemaError("problem file must hold a JSON object")
    unknown = set(obj) - _PROBLEM_KEYS
    if unknown:
        raise SchemaError(f"unknown problem fields: {sorted(unknown)}")
    tag = semiring_override or obj.get("semiring")
    if tag is None and ("grid" in obj or "slopes" in obj):
        tag = "rmax"  # grid functions are RMAX-valued
    if tag is None:
        raise SchemaError('problem needs a "semiring" field')
    sr = parse_semiring(tag)

    from .semiring import default_phi

    phi_text = phi_override if phi_override is not None else obj.get("phi")
    phi = default_phi(sr) if phi_text is None else make_phi(scalar_from_json(sr, phi_text))

    point = vector_from_json(sr, obj["point"]) if "point" in obj else None
    point2 = vector_from_json(sr, obj["point2"]) if "point2" in obj else None
    pdim = point.dim if point is not None else None
    generators = (
        family_from_json(sr, obj["generators"], pdim) if "generators" in obj else None
    )
    convex = family_from_json(sr, obj["convex"], pdim) if "convex" in obj else None
    mat = matrix_from_json(sr, obj["matrix"]) if "matrix" in obj else None
    bracket = obj.get("bracket", "canonical")
    if bracket not in ("canonical", "matrix", "opposite"):
        raise SchemaError(f"unknown bracket {bracket!r}")
    grid = grid_from_json(obj["grid"]) if "grid" in obj else None
    slopes = slopes_from_json(obj["slopes"]) if "slopes" in obj else None
    return Problem(sr, phi, generators, convex, point, point2, mat, bracket, grid, slopes)


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"
