"""Discrete Fenchel conjugation and the greatest convex minorant."""
import pytest
from hypothesis import given, settings, strategies as st

from idemod import (
    RMAX,
    MismatchError,
    biconjugate_is_fixed,
    bot,
    fenchel_transform,
    fin,
    grid_function,
    leq,
    lsc_convex_hull,
    slope_bracket,
    slope_set,
    top,
)
from idemod.laws import oracle_hull, oracle_transform, rand_grid, rand_slopes
import random

ABS = grid_function([-1, 0, 1], [1, 0, 1])  # |u| on the three-point grid
S3 = slope_set([-1, 0, 1])


def test_bracket_values():
    flat = grid_function([-1, 0, 1], [0, 0, 0])
    assert slope_bracket(0, flat) == fin(RMAX, 0)
    assert slope_bracket(1, ABS) == fin(RMAX, 0)
    plus_inf = grid_function([-1, 0, 1], ["+inf", "+inf", "+inf"])
    assert slope_bracket(0, plus_inf) == top(RMAX)


def test_transform_of_abs():
    tr = fenchel_transform(ABS, S3)
    assert list(tr.values) == [fin(RMAX, 0)] * 3


def test_transform_of_bottom_function():
    """The conjugate of the identically bottom function is identically top:
    each bracket collapses to bottom and negation sends it to top."""
    f = grid_function([-1, 0, 1], ["-inf", "-inf", "-inf"])
    assert slope_bracket(0, f) == bot(RMAX)
    tr = fenchel_transform(f, S3)
    assert list(tr.values) == [top(RMAX)] * 3
    assert list(tr.values) == oracle_transform(f, S3)


def test_transform_single_support_point():
    f = grid_function([-2, 1, 3], ["+inf", 0, "+inf"])
    tr = fenchel_transform(f, S3)
    assert list(tr.values) == [fin(RMAX, s * 1) for s in (-1, 0, 1)]


def test_hull_of_convex_function_is_itself():
    assert lsc_convex_hull(ABS, S3) == ABS


def test_hull_flattens_bump():
    f = grid_function([-1, 0, 1], [0, 1, 0])
    tr = fenchel_transform(f, S3)
    assert list(tr.values) == [fin(RMAX, 1), fin(RMAX, 0), fin(RMAX, 1)]
    hull = lsc_convex_hull(f, S3)
    assert hull == grid_function([-1, 0, 1], [0, 0, 0])


def test_hull_of_top_function():
    f = grid_function([0, 1], ["+inf", "+inf"])
    hull = lsc_convex_hull(f, S3)
    # brackets are all top, so the hull saturates to top as well
    assert list(hull.values) == [top(RMAX), top(RMAX)]
    assert biconjugate_is_fixed(f, S3)


def test_biconjugate_fixed_on_examples():
    for f in (
        ABS,
        grid_function([-1, 0, 1], [0, 1, 0]),
        grid_function([0, 2, 5], ["-inf", 3, "+inf"]),
    ):
        assert biconjugate_is_fixed(f, S3)


def test_grid_validation():
    with pytest.raises(MismatchError):
        grid_function([0], [1])
    with pytest.raises(MismatchError):
        grid_function([0, 0], [1, 2])
    with pytest.raises(MismatchError):
        grid_function([0, 1], [1])
    with pytest.raises(MismatchError):
        slope_set([])
    with pytest.raises(MismatchError):
        slope_set([1, 1])


def test_fractional_grid():
    f = grid_function(["-1/2", 0, "1/2"], ["1/2", 0, "1/2"])
    s = slope_set([-1, 0, 1])
    assert list(fenchel_transform(f, s).values) == oracle_transform(f, s)
    hull = lsc_convex_hull(f, s)
    assert all(leq(h, v) for h, v in zip(hull.values, f.values))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_random_functions_match_oracle(seed):
    rng = random.Random(seed)
    f = rand_grid(rng)
    s = rand_slopes(rng)
    assert list(fenchel_transform(f, s).values) == oracle_transform(f, s)
    hull = lsc_convex_hull(f, s)
    assert list(hull.values) == oracle_hull(f, s)
    assert all(leq(h, v) for h, v in zip(hull.values, f.values))
    assert lsc_convex_hull(hull, s) == hull
    assert biconjugate_is_fixed(f, s)
