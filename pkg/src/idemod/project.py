"""Canonical projector onto a finitely generated complete subsemimodule,
its opposite-order mirror, and the meet of dominating elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError, MismatchError, TheoremViolation
from .freemod import (
    GeneratingFamily,
    Vector,
    act,
    bot_vector,
    top_vector,
    vec_leq,
    vec_lres,
    vec_rres,
    vjoin,
    vmeet,
)
from .semiring import BOT, TOP, Scalar, add, bot, fin, leq, mul, top


@dataclass(frozen=True, slots=True)
class ProjectionResult:
    projection: Vector
    coefficients: tuple[Scalar, ...]  # one residuation coefficient per generator
    fixed: bool  # projection == x


def _check_family(w: GeneratingFamily, x: Vector) -> None:
    if w.semiring != x.semiring:
        raise MismatchError("family and point live in different semirings")
    if w.dim != x.dim:
        raise MismatchError(f"family dim {w.dim} vs point dim {x.dim}")


def project(w: GeneratingFamily, x: Vector) -> ProjectionResult:
    """Greatest element of span(w) below x: join of g*(g\\x) over generators."""
    _check_family(w, x)
    coeffs = tuple(vec_lres(g, x) for g in w)
    p = bot_vector(x.semiring, x.dim)
    for g, c in zip(w, coeffs):
        p = vjoin(p, act(g, c))
    return ProjectionResult(p, coeffs, p == x)


def is_member(w: GeneratingFamily, x: Vector) -> bool:
    """x belongs to span(w).

    Decided by the projection fixed point; the residuation form
    x\\P(x) = x\\x is recomputed as a cross-check and must agree.
    """
    res = project(w, x)
    fixed = res.projection == x
    residual = vec_lres(x, res.projection) == vec_lres(x, x)
    if fixed != residual:
        raise TheoremViolation(
            f"membership tests disagree on {x!r}: fixed={fixed} residual={residual}"
        )
    return fixed


def project_dual(w: GeneratingFamily, x: Vector) -> Vector:
    """Projection onto the opposite-order span of w: the meet of g/(x\\g)
    over generators.  Empty family yields the all-top vector."""
    _check_family(w, x)
    p = top_vector(x.semiring, x.dim)
    for g in w:
        p = vmeet(p, vec_rres(g, vec_lres(x, g)))
    return p


# -- meet of dominating span elements ---------------------------------------
#
# inf{v in span(w) : v >= x} computed exactly over RMAX.  The feasible
# coefficient region {t : A*t >= x} splits into boxes indexed by a choice of
# covering column per row; on each box the objective is separable, so the
# entrywise infimum is a finite expression even when a bound is an open
# interval (top entries in A).

_ALL = 0
_CLOSED = 1
_OPEN = 2  # every lambda strictly above bottom
_EMPTY = 3


def _cover_constraint(a: Scalar, xi: Scalar) -> tuple[int, Scalar | None]:
    if xi.kind == BOT:
        return (_ALL, None)
    if a.kind == BOT:
        return (_EMPTY, None)
    if a.kind == TOP:
        return (_OPEN, None)
    if xi.kind == TOP:
        return (_CLOSED, top(a.semiring))
    return (_CLOSED, fin(a.semiring, xi.value - a.value))


def _tighten(c1: tuple, c2: tuple) -> tuple:
    k1, b1 = c1
    k2, b2 = c2
    if k1 == _EMPTY or k2 == _EMPTY:
        return (_EMPTY, None)
    if k1 == _ALL:
        return c2
    if k2 == _ALL:
        return c1
    if k1 == _OPEN:
        return c2  # closed bounds here are never bottom
    if k2 == _OPEN:
        return c1
    return c1 if leq(b2, b1) else c2


def _box_floor(a: Scalar, constraint: tuple) -> Scalar:
    kind, bound = constraint
    sr = a.semiring
    if kind == _ALL:
        return bot(sr)
    if kind == _CLOSED:
        return mul(a, bound)
    # open interval: the infimum of a*lambda over lambda > bottom
    return top(sr) if a.kind == TOP else bot(sr)


def inf_dominating(w: GeneratingFamily, x: Vector) -> tuple[Vector, bool]:
    """Entrywise meet of the span elements dominating x, and whether that
    meet itself belongs to the span (it need not).  RMAX only."""
    _check_family(w, x)
    if x.semiring.name != "rmax":
        raise DomainError("dominating meet is implemented over RMAX only")
    n, p = x.dim, len(w)
    if p == 0:
        q = x if all(s.kind == BOT for s in x.entries) else top_vector(x.semiring, n)
        return q, is_member(w, q)
    if p**n > 200_000:
        raise DomainError("instance too large for exact choice enumeration")
    cols = [w.generators[j].entries for j in range(p)]
    covers = [[_cover_constraint(cols[j][i], x.entries[i]) for j in range(p)] for i in range(n)]

    q: Vector | None = None
    for choice in itertools.product(range(p), repeat=n):
        constraints = [(_ALL, None)] * p
        feasible = True
        for i, j in enumerate(choice):
            constraints[j] = _tighten(constraints[j], covers[i][j])
            if constraints[j][0] == _EMPTY:
                feasible = False
                break
        if not feasible:
            continue
        entries = []
        for i in range(n):
            acc = _box_floor(cols[0][i], constraints[0])
            for j in range(1, p):
                acc = add(acc, _box_floor(cols[j][i], constraints[j]))
            entries.append(acc)
        v = Vector(x.semiring, tuple(entries))
        q = v if q is None else vmeet(q, v)
    if q is None:
        q = top_vector(x.semiring, n)
    if not vec_leq(x, q):
        raise TheoremViolation("dominating meet fell below the point")
    return q, is_member(w, q)
