import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sparsemetric.balls import (
    Ball,
    BallShape,
    alt_ball_contains,
    alt_metric,
    ball_boundary_sample_2d,
    ball_chord_check,
    ball_contains,
    ball_nesting_check,
    discrete_ball_cases,
    limit_ball_membership,
)
from sparsemetric.exceptions import (
    DimensionMismatchError,
    NoInclusionRegimeError,
    UnsupportedGeometryError,
)
from sparsemetric.product import ProductMetric, ds_metric, support_distance, support_metric
from sparsemetric.scalar import Absolute, Discrete, Power

ORIGIN = (0.0, 0.0)


def test_ball_contains_examples():
    assert ball_contains(Ball(ORIGIN, 1, ProductMetric(Absolute(), 2)), (1, 0))
    assert not ball_contains(Ball(ORIGIN, 0.5, ds_metric(0.5)), (0.2, 0.2))
    assert ball_contains(Ball(ORIGIN, 1.5, support_metric()), (0, 7))


def test_open_ball_excludes_boundary():
    closed = Ball(ORIGIN, 1, ProductMetric(Absolute(), 2))
    opened = Ball(ORIGIN, 1, ProductMetric(Absolute(), 2), closed=False)
    assert (1, 0) in closed and (1, 0) not in opened
    assert ORIGIN not in Ball(ORIGIN, 0, closed=False)
    assert ORIGIN in Ball(ORIGIN, 0)


def test_ball_rejects_bad_input():
    with pytest.raises(ValueError):
        Ball(ORIGIN, -1)
    with pytest.raises(DimensionMismatchError):
        (1, 2, 3) in Ball(ORIGIN, 1)


def _at(points, n_dirs, degrees):
    return points[round(degrees / 360 * n_dirs)]


@pytest.mark.parametrize("metric, degrees, expected", [
    (ProductMetric(Absolute(), 2), 0, (1, 0)),
    (ProductMetric(Absolute(), 1), 45, (0.5, 0.5)),
    # radial solve 2 * sqrt(c) = 1 on the diagonal gives c = 1/4
    (ds_metric(0.5), 45, (0.25, 0.25)),
])
def test_boundary_sample_examples(metric, degrees, expected):
    pts = ball_boundary_sample_2d(Ball(ORIGIN, 1, metric), 8)
    assert _at(pts, 8, degrees) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("metric", [
    ProductMetric(Absolute(), 1.5),
    ProductMetric(Power(0.3), 1),
    ProductMetric([Absolute(), Power(0.5)], 3),
])
def test_boundary_points_sit_on_boundary(metric):
    ball = Ball((0.5, -2.0), 0.7, metric)
    pts = ball_boundary_sample_2d(ball, 90)
    assert all(abs(ball.distance(p) - 0.7) <= 1e-9 for p in pts)


def test_boundary_rejects_discrete():
    with pytest.raises(UnsupportedGeometryError):
        ball_boundary_sample_2d(Ball(ORIGIN, 1, alt_metric()), 8)


def test_boundary_needs_plane():
    with pytest.raises(DimensionMismatchError):
        ball_boundary_sample_2d(Ball((0, 0, 0), 1), 8)


def test_nesting_small_radius():
    res = ball_nesting_check(0.5, 0.25, 0.75, dim=2, samples=10_000, seed=0)
    assert res.regime == "shrinking"
    assert res.ok
    assert res.n_premise > 1000  # the check is not vacuous


def test_nesting_large_radius():
    res = ball_nesting_check(3, 0.25, 0.75, dim=2, samples=10_000, seed=0)
    assert res.regime == "growing"
    assert res.ok
    assert res.n_premise > 1000


def test_nesting_intermediate_regime_signal():
    with pytest.raises(NoInclusionRegimeError):
        ball_nesting_check(1.5, 0.25, 0.75, dim=2)
    with pytest.raises(NoInclusionRegimeError):
        ball_nesting_check(1.0, 0.25, 0.75, dim=3)


def test_nesting_oracle_by_direct_membership():
    # independent of the sampler: dense grid, direct membership
    g = np.linspace(-0.5, 0.5, 101)
    fine, coarse = Ball(ORIGIN, 0.5, ds_metric(0.25)), Ball(ORIGIN, 0.5, ds_metric(0.75))
    assert all((a, b) in coarse for a in g for b in g if (a, b) in fine)


def test_no_inclusion_really_fails_both_ways_at_r_1_5():
    a, b = Ball(ORIGIN, 1.5, ds_metric(0.25)), Ball(ORIGIN, 1.5, ds_metric(0.75))
    # axis point (0, 3): 3**0.25 < 1.5 < 3**0.75; diagonal (0.5, 0.5): 2*0.5**0.75 < 1.5 < 2*0.5**0.25
    assert (0, 3) in a and (0, 3) not in b
    assert (0.5, 0.5) in b and (0.5, 0.5) not in a


def test_strict_inclusion_witness():
    assert (0.2, 0.2) in Ball(ORIGIN, 0.5, ds_metric(1))
    assert (0.2, 0.2) not in Ball(ORIGIN, 0.5, ds_metric(0.5))


@pytest.mark.parametrize("r, point, expected", [
    (0.5, (0, 0), True), (0.5, (0.1, 0), False),
    (1.5, (0, -4), True), (1.5, (1, 1), False),
    (2, (5, 5), True),
])
def test_limit_ball_examples(r, point, expected):
    assert limit_ball_membership(r, point) is expected


@given(st.floats(0, 4), st.lists(st.sampled_from([0.0, 0.5, -3.0, 1e-12]), min_size=2, max_size=5))
def test_limit_ball_is_support_count(r, x):
    assert limit_ball_membership(r, x) == (support_distance(x, np.zeros(len(x))) <= r)


@pytest.mark.parametrize("r, point, expected", [
    (0.5, (0, 0.4), True), (0.5, (0.3, 0), False),
    (1, (2, 0), True),
    (1.5, (1, 0.5), True), (1.5, (1, 0.6), False),
])
def test_alt_ball_examples(r, point, expected):
    assert alt_ball_contains(r, point) is expected


@pytest.mark.parametrize("r", [0.5, 1.0, 1.5])
def test_alt_ball_matches_generic_on_grid(r):
    g = np.linspace(-2, 2, 201)
    ball = Ball(ORIGIN, r, ProductMetric([Discrete(), Absolute()], 1))
    mismatches = sum(alt_ball_contains(r, (a, b)) != ((a, b) in ball) for a in g for b in g)
    assert mismatches == 0


@pytest.mark.parametrize("r, shape", [
    (0.5, BallShape.SINGLETON), (1, BallShape.WHOLE_SPACE), (100, BallShape.WHOLE_SPACE),
    (0, BallShape.SINGLETON),
])
def test_discrete_ball_cases(r, shape):
    assert discrete_ball_cases(r) is shape


@pytest.mark.parametrize("p", [1, 2, math.inf])
def test_norm_balls_are_convex(p):
    assert ball_chord_check(Ball(ORIGIN, 1, ProductMetric(Absolute(), p)), seed=0) is None


def test_ds_ball_non_convexity_witness():
    w = ball_chord_check(Ball(ORIGIN, 1, ds_metric(0.5)), seed=0)
    assert w is not None
    assert w.t == 0.5
    # midpoint of (1,0),(0,1) has d_s = 2 * sqrt(1/2)
    assert w.magnitude == pytest.approx(math.sqrt(2) - 1, abs=1e-12)
