"""Dual-pair machinery: conjugations, closed elements, reflexivity,
representation and extension of linear forms, the opposite bracket, and the
row/column lattice anti-isomorphism for Boolean matrices.

Three brackets are supported.  The canonical one pairs row and column
vectors through join-of-products; the matrix bracket inserts a fixed
rectangular matrix in the middle; the opposite bracket pairs a semimodule
with itself through residuation, valued in the order-reversed scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, MismatchError, TheoremViolation
from .freemod import (
    CoVector,
    GeneratingFamily,
    Matrix,
    Vector,
    act,
    bot_vector,
    covec_mat,
    mat_vec,
    vec_leq,
    vec_lres,
    vec_rres,
    vjoin,
)
from .semiring import (
    BOOL,
    Phi,
    Scalar,
    SemiringId,
    add,
    bot,
    leq,
    lres,
    mul,
    rres,
    sort_key,
    top,
)

CANONICAL = "canonical"
MATRIX = "matrix"
OPPOSITE = "opposite"


@dataclass(frozen=True, slots=True)
class DualPairConfig:
    bracket: str
    phi: Phi
    matrix: Matrix | None = None

    def __post_init__(self) -> None:
        if self.bracket not in (CANONICAL, MATRIX, OPPOSITE):
            raise DomainError(f"unknown bracket {self.bracket!r}")
        if self.bracket == MATRIX and self.matrix is None:
            raise DomainError("matrix bracket needs its matrix")


def bracket_eval(cfg: DualPairConfig, y, x: Vector) -> Scalar:
    """<y, x> for the configured bracket.  For the opposite bracket the result
    lives in the order-reversed scalars; callers compare accordingly."""
    if cfg.bracket == CANONICAL:
        if len(y.entries) != len(x.entries):
            raise MismatchError("bracket sides of unequal dimension")
        acc = mul(y.entries[0], x.entries[0])
        for a, b in zip(y.entries[1:], x.entries[1:]):
            acc = add(acc, mul(a, b))
        return acc
    if cfg.bracket == MATRIX:
        ax = mat_vec(cfg.matrix, x)
        acc = mul(y.entries[0], ax.entries[0])
        for a, b in zip(y.entries[1:], ax.entries[1:]):
            acc = add(acc, mul(a, b))
        return acc
    return vec_lres(x, y)


def conj_left(cfg: DualPairConfig, x: Vector):
    """Conjugate of x: the greatest y with <y, x> <= phi."""
    phi = cfg.phi.value
    if cfg.bracket == CANONICAL:
        return CoVector(x.semiring, tuple(rres(phi, xi) for xi in x.entries))
    if cfg.bracket == MATRIX:
        ax = mat_vec(cfg.matrix, x)
        return CoVector(x.semiring, tuple(rres(phi, v) for v in ax.entries))
    # opposite: the op-greatest y with x\y >= phi is x*phi
    return act(x, phi)


def conj_right(cfg: DualPairConfig, y) -> Vector:
    """Conjugate of y: the greatest x with <y, x> <= phi."""
    phi = cfg.phi.value
    if cfg.bracket == CANONICAL:
        return Vector(y.semiring, tuple(lres(yi, phi) for yi in y.entries))
    if cfg.bracket == MATRIX:
        ya = covec_mat(y, cfg.matrix)
        return Vector(y.semiring, tuple(lres(v, phi) for v in ya.entries))
    return vec_rres(y, phi)


def is_closed(cfg: DualPairConfig, x: Vector) -> bool:
    return conj_right(cfg, conj_left(cfg, x)) == x


def is_reflexive(sr: SemiringId, phi: Phi, samples: Iterable[Scalar]) -> bool:
    """Check phi/(lam\\phi) = lam and (phi/lam)\\phi = lam on the samples."""
    p = phi.value
    for lam in samples:
        if rres(p, lres(lam, p)) != lam:
            return False
        if lres(rres(p, lam), p) != lam:
            return False
    return True


def eval_form(x: Vector, phi: Phi, y: Vector) -> Scalar:
    """The linear continuous form represented by x: y -> phi/(y\\x)."""
    return rres(phi.value, vec_lres(y, x))


def represent_form(values_on_basis: Sequence[Scalar], phi: Phi, sr: SemiringId) -> Vector:
    """Representer of the form whose values on the coordinate basis are given:
    x_i = f(delta_i)\\phi."""
    if not values_on_basis:
        raise MismatchError("need at least one basis value")
    return Vector(sr, tuple(lres(v, phi.value) for v in values_on_basis))


@dataclass(frozen=True, slots=True)
class LinearForm:
    representer: Vector
    phi: Phi

    def __call__(self, y: Vector) -> Scalar:
        return eval_form(self.representer, self.phi, y)


def extend_form(
    w: GeneratingFamily, values: Sequence[Scalar], phi: Phi
) -> tuple[Vector, LinearForm]:
    """Extend a linear continuous form given by its generator values to the
    whole space.

    The representer is the greatest span element on which the form stays
    below phi; inputs that do not actually restrict a linear continuous form
    on the span are rejected.
    """
    if len(values) != len(w):
        raise MismatchError("one value per generator required")
    if len(w) == 0:
        x = bot_vector(w.semiring, w.dim)
        return x, LinearForm(x, phi)
    x = bot_vector(w.semiring, w.dim)
    for g, val in zip(w, values):
        x = vjoin(x, act(g, lres(val, phi.value)))
    form = LinearForm(x, phi)
    for g, val in zip(w, values):
        if form(g) != val:
            raise DomainError("values do not define a linear continuous form on V")
    return x, form


def opposite_bracket(x: Vector, y: Vector) -> Scalar:
    """<y, x> = x\\y, the pairing of a semimodule with its order-reversed
    self."""
    return vec_lres(x, y)


@dataclass(frozen=True, slots=True)
class LatticeReport:
    row_space: tuple[CoVector, ...]
    col_space: tuple[Vector, ...]
    iso_pairs: tuple[tuple[CoVector, Vector], ...]
    order_reversing: bool
    bijective: bool


def vec_key(v) -> tuple:
    return tuple(sort_key(s) for s in v.entries)


def _enumerate_boolean(dim: int):
    eps, e = bot(BOOL), top(BOOL)
    pattern = [eps, e]
    idx = [0] * dim
    while True:
        yield tuple(pattern[i] for i in idx)
        k = dim - 1
        while k >= 0 and idx[k] == 1:
            idx[k] = 0
            k -= 1
        if k < 0:
            return
        idx[k] = 1


def lattice_meet(elements: Sequence[Vector], a: Vector, b: Vector) -> Vector:
    """Meet inside a finite join-closed family: join of the members below both
    a and b.  Differs from the entrywise meet in general."""
    acc = None
    for v in elements:
        if vec_leq(v, a) and vec_leq(v, b):
            acc = v if acc is None else vjoin(acc, v)
    if acc is None:
        raise TheoremViolation("join-closed family without a bottom element")
    return acc


def rowcol_report(a: Matrix, phi: Phi, cap: int = 8) -> LatticeReport:
    """Row space, column space, and the residuation map between them, all by
    exhaustive enumeration.  Boolean matrices only."""
    if a.semiring.name != "bool":
        raise DomainError("exhaustive row/column duality is Boolean-only")
    if a.rows > cap or a.cols > cap:
        raise DomainError(f"matrix exceeds the enumeration cap {cap}")
    p = phi.value

    rows: dict[tuple, CoVector] = {}
    for ye in _enumerate_boolean(a.rows):
        z = covec_mat(CoVector(BOOL, ye), a)
        rows.setdefault(vec_key(z), z)
    cols: dict[tuple, Vector] = {}
    for xe in _enumerate_boolean(a.cols):
        v = mat_vec(a, Vector(BOOL, xe))
        cols.setdefault(vec_key(v), v)
    row_space = tuple(rows[k] for k in sorted(rows))
    col_space = tuple(cols[k] for k in sorted(cols))

    pairs = []
    for z in row_space:
        zres = Vector(BOOL, tuple(lres(zi, p) for zi in z.entries))
        pairs.append((z, mat_vec(a, zres)))

    images = [img for _, img in pairs]
    bijective = (
        len({vec_key(v) for v in images}) == len(row_space)
        and {vec_key(v) for v in images} == set(cols)
    )
    order_reversing = True
    for zi, vi in pairs:
        for zj, vj in pairs:
            if all(leq(x, y) for x, y in zip(zi.entries, zj.entries)):
                if not vec_leq(vj, vi):
                    order_reversing = False
    return LatticeReport(row_space, col_space, tuple(pairs), order_reversing, bijective)
