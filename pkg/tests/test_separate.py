"""Separation: universal, dual, convex, half-spaces, point pairs."""
import pytest
from hypothesis import given, settings

from idemod import (
    BOOL,
    NMAX,
    RMAX,
    DomainError,
    MismatchError,
    bot,
    bot_vector,
    convex_projection,
    family,
    fin,
    halfspace,
    halfspace_contains,
    is_member,
    separate_dual,
    separate_from_convex,
    separate_from_module,
    separate_points,
    top_vector,
    unit,
    vec_lres,
    vector,
    vjoin,
)
from conftest import families, vectors

W_LIFTED = family(RMAX, [[0, 0, 0], [1, 3, 0], [3, 4, 0]])
HULL_ABC = family(RMAX, [[0, 0], [1, 3], [3, 4]])
M = vector(RMAX, [-1, 0])


def test_module_separation_of_lifted_point():
    cert = separate_from_module(W_LIFTED, vector(RMAX, [-1, 0, 0]))
    assert cert.projection == vector(RMAX, [-1, 0, -1])
    assert cert.orthogonality_checked
    assert cert.separated


def test_module_separation_of_members():
    assert not separate_from_module(W_LIFTED, W_LIFTED.generators[1]).separated
    assert not separate_from_module(W_LIFTED, bot_vector(RMAX, 3)).separated


def test_convex_separation_of_m():
    sep = separate_from_convex(HULL_ABC, M)
    assert sep.nu == fin(RMAX, -1)
    assert sep.y == vector(RMAX, [-1, 0])
    assert sep.lifted_projection == vector(RMAX, [-1, 0, -1])
    assert not sep.member
    assert sep.normalized == vector(RMAX, [0, 1])
    assert convex_projection(HULL_ABC, M) == vector(RMAX, [0, 1])


def test_convex_separation_of_hull_point():
    x = vector(RMAX, [1, 3])
    sep = separate_from_convex(HULL_ABC, x)
    assert sep.nu == unit(RMAX)
    assert sep.y == x
    assert sep.member
    assert sep.normalized == x
    assert convex_projection(HULL_ABC, x) == x


def test_convex_separation_singular_case():
    """Separating bottom from a hull that misses it: nu and y collapse to
    bottom and no normalised projection exists."""
    c = family(RMAX, [[0], ["+inf"]])
    x = vector(RMAX, ["-inf"])
    sep = separate_from_convex(c, x)
    assert sep.nu == bot(RMAX)
    assert sep.y == bot_vector(RMAX, 1)
    assert not sep.member
    assert sep.normalized is None
    assert convex_projection(c, x) is None


def test_halfspace_from_m():
    h = halfspace(HULL_ABC, M)
    assert h.contains(vector(RMAX, [0, 0]))
    assert h.contains(vector(RMAX, [1, 3]))
    assert h.contains(vector(RMAX, [3, 4]))
    assert h.contains(vector(RMAX, [5, 5]))
    assert not h.contains(M)
    assert halfspace_contains(h, vector(RMAX, [0, 0]))


def test_halfspace_matches_min_form():
    """Over the plane the predicate reduces to min(-1-u, -v, 0) <= -1."""
    h = halfspace(HULL_ABC, M)
    for u in range(-4, 5):
        for v in range(-4, 5):
            expected = min(-1 - u, -v, 0) <= -1
            assert h.contains(vector(RMAX, [u, v])) == expected


def test_convex_separation_needs_semifield():
    with pytest.raises(DomainError):
        separate_from_convex(family(NMAX, [[0, 0]]), vector(NMAX, [1, 1]))
    with pytest.raises(MismatchError):
        separate_from_convex(family(RMAX, [[0, 0]]), vector(RMAX, [1, 1, 1]))


def test_boolean_convex_separation():
    c = family(BOOL, [["e", "eps"]])
    inside = vector(BOOL, ["e", "eps"])
    outside = vector(BOOL, ["e", "e"])
    assert separate_from_convex(c, inside).member
    sep = separate_from_convex(c, outside)
    assert not sep.member
    h = halfspace(c, outside)
    assert h.contains(inside) and not h.contains(outside)


def test_dual_separation():
    w = family(RMAX, [[0, 0]])
    x = vector(RMAX, [-1, -2])
    cert = separate_dual(w, x)
    assert cert.projection == vector(RMAX, [-1, -1])
    assert cert.separated
    # opposite-order span elements are fixed, hence not separated
    assert not separate_dual(w, vector(RMAX, [3, 3])).separated
    assert not separate_dual(w, top_vector(RMAX, 2)).separated


def test_separate_points():
    assert separate_points(vector(RMAX, [0, 0]), vector(RMAX, [0, 0])) is None
    x, y = vector(RMAX, [0, 0]), vector(RMAX, [1, 0])
    z = separate_points(x, y)
    assert z in (x, y)
    assert vec_lres(x, z) != vec_lres(y, z)
    x2, y2 = vector(RMAX, ["-inf", 0]), vector(RMAX, [0, 0])
    z2 = separate_points(x2, y2)
    assert vec_lres(x2, z2) != vec_lres(y2, z2)


@settings(max_examples=100)
@given(families(dim=3, max_size=4), vectors(dim=3))
def test_universal_separation_iff_membership(fam, x):
    cert = separate_from_module(fam, x)  # orthogonality asserted internally
    assert cert.separated == (not is_member(fam, x))


@settings(max_examples=100)
@given(families(dim=2, max_size=3).filter(lambda f: len(f) > 0), vectors(dim=2))
def test_convex_relations_on_generators(fam, x):
    sep = separate_from_convex(fam, x)  # equalities asserted internally
    e = unit(RMAX)
    from idemod import leq, meet

    lhs = meet(vec_lres(x, x), e)
    rhs = meet(vec_lres(x, sep.y), sep.nu)
    if sep.member:
        assert lhs == rhs
    else:
        assert leq(rhs, lhs) and rhs != lhs


@settings(max_examples=100)
@given(families(dim=2, max_size=3).filter(lambda f: len(f) > 0), vectors(dim=2))
def test_halfspace_always_covers_hull_points(fam, x):
    h = halfspace(fam, x)
    # a hull element: join of generators scaled by e joined across the family
    v = fam.generators[0]
    for g in fam:
        v = vjoin(v, g)
    assert h.contains(v)


@given(vectors(dim=3), vectors(dim=3))
def test_points_always_witnessed(x, y):
    z = separate_points(x, y)
    if x == y:
        assert z is None
    else:
        assert vec_lres(x, z) != vec_lres(y, z)
