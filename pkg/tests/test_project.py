"""Projector, membership, opposite-order projection and the dominating meet."""
import itertools

import pytest
from hypothesis import given, settings

from idemod import (
    RMAX,
    DomainError,
    GeneratingFamily,
    act,
    bot,
    bot_vector,
    column_family,
    family,
    fin,
    inf_dominating,
    is_member,
    matrix,
    project,
    project_dual,
    top_vector,
    vec_leq,
    vec_lres,
    vec_rres,
    vector,
    vjoin,
    vmeet,
)
from conftest import families, scalars, vectors


W_LIFTED = family(RMAX, [[0, 0, 0], [1, 3, 0], [3, 4, 0]])
A_3X2 = matrix(RMAX, [[0, -1], [-1, 0], [0, 0]])


def test_projection_of_lifted_outside_point():
    x = vector(RMAX, [-1, 0, 0])
    res = project(W_LIFTED, x)
    assert res.projection == vector(RMAX, [-1, 0, -1])
    assert not res.fixed
    assert not is_member(W_LIFTED, x)


def test_projection_fixes_generators_and_scalings():
    for g in W_LIFTED:
        res = project(W_LIFTED, g)
        assert res.fixed and res.projection == g
        assert is_member(W_LIFTED, act(g, fin(RMAX, 5)))
    assert is_member(W_LIFTED, bot_vector(RMAX, 3))


def test_empty_family_projects_to_bottom():
    empty = GeneratingFamily(RMAX, 3, ())
    res = project(empty, vector(RMAX, [1, 2, 3]))
    assert res.projection == bot_vector(RMAX, 3)
    assert res.coefficients == ()
    assert is_member(empty, bot_vector(RMAX, 3))
    assert not is_member(empty, vector(RMAX, [0, 0, 0]))


def test_projection_by_hand_expansion():
    w = column_family(A_3X2)
    x = vector(RMAX, [-1, -1, 0])
    assert project(w, x).projection == vector(RMAX, [-1, -1, -1])


def test_project_dual_formula():
    w = family(RMAX, [[0, 0]])
    x = vector(RMAX, [-1, -2])
    assert vec_lres(x, w.generators[0]) == fin(RMAX, 1)
    assert project_dual(w, x) == vector(RMAX, [-1, -1])


def test_project_dual_empty_family_is_top():
    assert project_dual(GeneratingFamily(RMAX, 2, ()), vector(RMAX, [0, 0])) == top_vector(RMAX, 2)


def test_project_dual_fixes_op_span():
    w = family(RMAX, [[0, -1], [2, 0]])
    v = vmeet(vec_rres(w.generators[0], fin(RMAX, 3)), vec_rres(w.generators[1], fin(RMAX, -1)))
    assert project_dual(w, v) == v


def test_dominating_meet_pinned_counterexample():
    w = column_family(A_3X2)
    x = vector(RMAX, [-1, -1, 0])
    q, member = inf_dominating(w, x)
    assert q == x
    assert member is False
    # while the projection from below is a member but differs from x
    assert project(w, x).projection == vector(RMAX, [-1, -1, -1])


def test_dominating_meet_of_member_is_itself():
    w = family(RMAX, [[0, 0]])
    q, member = inf_dominating(w, vector(RMAX, [1, 0]))
    assert q == vector(RMAX, [1, 1])
    assert member is True
    v = act(w.generators[0], fin(RMAX, -2))
    q2, member2 = inf_dominating(w, v)
    assert q2 == v and member2


def test_dominating_meet_no_cover_is_top():
    w = family(RMAX, [[0, "-inf"]])
    q, member = inf_dominating(w, vector(RMAX, [0, 0]))
    assert q == top_vector(RMAX, 2)
    assert member is False


def test_dominating_meet_with_top_generator_entries():
    """Covering through a top entry constrains the coefficient to an open
    interval; the entrywise infimum is still exact."""
    w = family(RMAX, [["+inf"]])
    q, member = inf_dominating(w, vector(RMAX, [5]))
    assert q == vector(RMAX, ["+inf"])
    assert member is True  # top itself is a scaling of the generator

    w2 = family(RMAX, [["+inf", 0]])
    q2, member2 = inf_dominating(w2, vector(RMAX, [3, "-inf"]))
    # dominators are (top, lam) for every lam above bottom, whose meet
    # escapes the span
    assert q2 == vector(RMAX, ["+inf", "-inf"])
    assert member2 is False

    # pinning a coordinate at top forces the coefficient itself to top
    w3 = family(RMAX, [[0, 1]])
    q3, member3 = inf_dominating(w3, vector(RMAX, ["+inf", 0]))
    assert q3 == top_vector(RMAX, 2)
    assert member3 is True


def _dominating_by_grid(w, x, lo=-15, hi=15):
    """Brute-force oracle: meet of the combinations dominating x, with the
    coefficients scanned over a grid wide enough to contain every tight
    coefficient for the integer data used here."""
    grid = [bot(RMAX)] + [fin(RMAX, q) for q in range(lo, hi + 1)]
    best = top_vector(RMAX, x.dim)
    p = len(w)
    for choice in itertools.product(grid, repeat=p):
        v = bot_vector(RMAX, x.dim)
        for g, lam in zip(w, choice):
            v = vjoin(v, act(g, lam))
        if vec_leq(x, v):
            best = vmeet(best, v)
    return best


@pytest.mark.parametrize(
    "gens,point",
    [
        ([[0, -1, 0], [-1, 0, 0]], [-1, -1, 0]),
        ([[0, 0]], [1, 0]),
        ([[0, 2], [1, 0]], [0, 0]),
        ([[0, 1], ["-inf", 1]], [2, 3]),
        ([[3, 0], [0, 2]], [-5, 4]),
        ([[0, "-inf", 1]], [-2, "-inf", -1]),
    ],
)
def test_dominating_meet_matches_grid_oracle(gens, point):
    w = family(RMAX, gens)
    x = vector(RMAX, point)
    q, _ = inf_dominating(w, x)
    assert q == _dominating_by_grid(w, x)


def test_dominating_meet_requires_rmax():
    from idemod import NMAX

    w = family(NMAX, [[0, 0]])
    with pytest.raises(DomainError):
        inf_dominating(w, vector(NMAX, [1, 1]))


@settings(max_examples=80)
@given(families(dim=3, max_size=3), vectors(dim=3))
def test_projection_is_decreasing_and_idempotent(fam, x):
    p = project(fam, x).projection
    assert vec_leq(p, x)
    assert project(fam, p).projection == p


@settings(max_examples=80)
@given(families(dim=2, max_size=3), vectors(dim=2), scalars(), scalars())
def test_projection_maximality(fam, x, l1, l2):
    v = bot_vector(RMAX, 2)
    for g, lam in zip(fam, itertools.cycle([l1, l2])):
        v = vjoin(v, act(g, lam))
    if vec_leq(v, x):
        assert vec_leq(v, project(fam, x).projection)


@settings(max_examples=80)
@given(families(dim=2, max_size=3), vectors(dim=2), vectors(dim=2))
def test_dual_characterization(fam, x, z):
    """The projection is the least point whose residuals against every
    generator dominate those of x."""
    p = project(fam, x).projection
    from idemod import leq

    assert all(leq(vec_lres(g, x), vec_lres(g, p)) for g in fam)
    if all(leq(vec_lres(g, x), vec_lres(g, z)) for g in fam):
        assert vec_leq(p, z)
