"""Legendre-Fenchel conjugation as residuation on one-dimensional grids.

Functions are sampled on a finite strictly increasing grid; the span of a
finite set of linear functions u -> s*u plays the role of the convex cone.
The conjugate of f at slope s is the negated residuation bracket of the
linear function against f, and projecting onto the span of the linear
functions computes the greatest convex minorant expressible with those
slopes.  Only the operator identities are claimed; coincidence with the
classical geometric hull depends on slope coverage.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MismatchError
from .semiring import BOT, FIN, RMAX, Rational, Scalar, add, bot, fin, lres, meet, mul, scal, top


@dataclass(frozen=True, slots=True)
class GridFunction:
    points: tuple[Rational, ...]  # strictly increasing
    values: tuple[Scalar, ...]  # RMAX, may be +-inf

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise MismatchError("grids need at least two points")
        if len(self.points) != len(self.values):
            raise MismatchError("one value per grid point")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise MismatchError("grid points must be strictly increasing")
        for v in self.values:
            if v.semiring != RMAX:
                raise MismatchError("grid values must be RMAX scalars")


@dataclass(frozen=True, slots=True)
class SlopeSet:
    slopes: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if not self.slopes:
            raise MismatchError("need at least one slope")
        if any(b <= a for a, b in zip(self.slopes, self.slopes[1:])):
            raise MismatchError("slopes must be strictly increasing")


@dataclass(frozen=True, slots=True)
class Transform:
    slopes: SlopeSet
    values: tuple[Scalar, ...]  # conjugate values, one per slope


def grid_function(points, values) -> GridFunction:
    return GridFunction(
        tuple(_rat(p) for p in points), tuple(scal(RMAX, v) for v in values)
    )


def slope_set(slopes) -> SlopeSet:
    return SlopeSet(tuple(_rat(s) for s in slopes))


def _rat(x) -> Rational:
    if isinstance(x, int):
        return x
    q = Fraction(x)
    return int(q) if q.denominator == 1 else q


def _neg(s: Scalar) -> Scalar:
    if s.kind == BOT:
        return top(RMAX)
    if s.kind == FIN:
        return fin(RMAX, -s.value)
    return bot(RMAX)


def slope_bracket(slope: Rational, f: GridFunction) -> Scalar:
    """Residuation of the linear function u -> slope*u against f: the
    greatest constant c with slope*u + c <= f(u) on the grid."""
    s = _rat(slope)
    acc = None
    for u, v in zip(f.points, f.values):
        term = lres(fin(RMAX, s * u), v)
        acc = term if acc is None else meet(acc, term)
    return acc


def fenchel_transform(f: GridFunction, slopes: SlopeSet) -> Transform:
    """Conjugate values sup_u(s*u - f(u)), computed as negated brackets."""
    return Transform(
        slopes, tuple(_neg(slope_bracket(s, f)) for s in slopes.slopes)
    )


def lsc_convex_hull(f: GridFunction, slopes: SlopeSet) -> GridFunction:
    """Projection of f onto the span of the slope functions: the pointwise
    join of the affine minorants s*u + (s\\f).  Never exceeds f."""
    brackets = [slope_bracket(s, f) for s in slopes.slopes]
    out = []
    for u in f.points:
        acc = bot(RMAX)
        for s, c in zip(slopes.slopes, brackets):
            acc = add(acc, mul(fin(RMAX, s * u), c))
        out.append(acc)
    return GridFunction(f.points, tuple(out))


def biconjugate_is_fixed(f: GridFunction, slopes: SlopeSet) -> bool:
    """The hull has the same conjugate as f, and hulling is idempotent.
    A False return is a library bug, not a data property."""
    hull = lsc_convex_hull(f, slopes)
    same_conjugate = fenchel_transform(hull, slopes) == fenchel_transform(f, slopes)
    idempotent = lsc_convex_hull(hull, slopes) == hull
    return same_conjugate and idempotent
