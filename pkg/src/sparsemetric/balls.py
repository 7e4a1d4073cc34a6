"""Balls under product metrics: membership, boundaries, nesting and limits."""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import TAU, check_exponent_01, check_pair, check_tau, check_vector
from .exceptions import (
    ConvergenceError,
    DimensionMismatchError,
    NoInclusionRegimeError,
    UnsupportedGeometryError,
)
from .product import ProductMetric, ds_metric, support_distance
from .scalar import Absolute, Discrete

_BISECT_ITERS = 100
_BRACKET_DOUBLINGS = 200


@dataclass(frozen=True, eq=False)
class Ball:
    """Ball of ``radius`` around ``center`` under ``metric``.

    ``closed=True`` uses ``d <= r``; ``closed=False`` uses ``d < r``, so an
    open ball of radius 0 is empty.
    """

    center: np.ndarray
    radius: float
    metric: ProductMetric = field(default_factory=lambda: ProductMetric(Absolute(), 2))
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "center", check_vector(self.center, "center"))
        r = float(self.radius)
        if not (r >= 0 and math.isfinite(r)):
            raise ValueError(f"radius must be finite and >= 0, got {self.radius}")
        object.__setattr__(self, "radius", r)
        if self.metric.dim is not None and self.metric.dim != self.center.shape[0]:
            raise DimensionMismatchError("metric and center dimensions differ")

    def distance(self, point):
        point, center = check_pair(point, self.center)
        return self.metric(point, center)

    def __contains__(self, point):
        d = self.distance(point)
        return d <= self.radius if self.closed else d < self.radius


def ball_contains(ball, point):
    return point in ball


def _radial_boundary(metric, center, u, r, tol):
    def g(t):
        return metric(center + t * u, center)

    lo, hi = 0.0, 1.0
    for _ in range(_BRACKET_DOUBLINGS):
        if g(hi) >= r:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise ConvergenceError("could not bracket the ball boundary")

    # bisect to float resolution; tol is only the acceptance test
    best_t, best_err = hi, abs(g(hi) - r)
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        err = abs(gm - r)
        if err < best_err:
            best_t, best_err = mid, err
        if gm == r:
            break
        if gm < r:
            lo = mid
        else:
            hi = mid
    if best_err > tol:
        raise ConvergenceError(
            f"radial bisection stopped {best_err:.3g} away from the boundary"
        )
    return center + best_t * u


def boundary_angles(n_dirs):
    return 2.0 * np.pi * np.arange(n_dirs) / n_dirs


def ball_boundary_sample_2d(ball, n_dirs=360, tol=1e-9):
    """Points on the boundary of a planar ball along equally spaced rays.

    For each direction ``theta_k = 2*pi*k/n_dirs`` the radius ``t`` with
    ``d(center + t*(cos, sin), center) = r`` is found by bisection, which
    relies on the distance growing monotonically along every ray (true for
    all continuous components). Returns an array of shape ``(n_dirs, 2)``.
    """
    if ball.center.shape[0] != 2:
        raise DimensionMismatchError("boundary sampling is only defined in the plane")
    if ball.metric.has_discrete:
        raise UnsupportedGeometryError(
            "a discrete component makes the boundary degenerate; use "
            "alt_ball_contains or discrete_ball_cases instead"
        )
    if not ball.radius > 0:
        raise ValueError("boundary sampling needs a positive radius")
    if n_dirs < 1:
        raise ValueError("n_dirs must be >= 1")
    theta = boundary_angles(n_dirs)
    dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    # cos(pi/2) ~ 6e-17 would still register under |.|^s for small s
    dirs[np.abs(dirs) < 1e-15] = 0.0
    return np.array([
        _radial_boundary(ball.metric, ball.center, u, ball.radius, tol) for u in dirs
    ])


@dataclass
class NestingResult:
    regime: str
    radius: float
    s_fine: float
    s_coarse: float
    n_samples: int
    n_premise: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def _ray_radius(u, s, r):
    # sum |t*u_i|^s = t^s * sum |u_i|^s = r
    return (r / np.sum(np.abs(u) ** s)) ** (1.0 / s)


def ball_nesting_check(r, s_fine, s_coarse, dim=2, samples=10_000, seed=None):
    """Test the subset relation between two d_s balls around the origin.

    For ``r < 1`` every point of the ``s_fine`` ball must lie in the
    ``s_coarse`` ball (balls shrink as ``s`` decreases). For ``r >= dim`` the
    reverse holds. In between no inclusion exists and
    :class:`NoInclusionRegimeError` is raised.

    Points are drawn along random rays, uniformly in radius up to 10% past
    one of the two boundaries (alternating), so both sides of each boundary
    get hit.
    """
    s_fine = check_exponent_01(s_fine, "s_fine")
    s_coarse = check_exponent_01(s_coarse, "s_coarse")
    if not s_fine < s_coarse:
        raise ValueError("need 0 < s_fine < s_coarse <= 1")
    r = float(r)
    if not r > 0:
        raise ValueError("radius must be positive")
    if r < 1:
        regime, premise_s, concl_s = "shrinking", s_fine, s_coarse
    elif r >= dim:
        regime, premise_s, concl_s = "growing", s_coarse, s_fine
    else:
        raise NoInclusionRegimeError(r, dim)

    zero = np.zeros(dim)
    premise = Ball(zero, r, ds_metric(premise_s))
    conclusion = Ball(zero, r, ds_metric(concl_s))
    rng = np.random.default_rng(seed)
    result = NestingResult(regime, r, s_fine, s_coarse, samples, 0)
    for k in range(samples):
        u = rng.standard_normal(dim)
        t_max = 1.1 * _ray_radius(u, (s_fine, s_coarse)[k % 2], r)
        x = rng.uniform(0.0, t_max) * u
        if x in premise:
            result.n_premise += 1
            if x not in conclusion:
                result.violations.append(x)
    return result


def limit_ball_membership(r, point, tau=TAU):
    """Membership in the limit ball ``{x : ||x||_0 <= r}`` around the origin.

    In the plane this is the origin alone for ``r < 1``, the two coordinate
    axes for ``1 <= r < 2`` and everything for ``r >= 2``.
    """
    if not r >= 0:
        raise ValueError("radius must be >= 0")
    point = check_vector(point, "point")
    return support_distance(point, np.zeros_like(point), tau) <= r


def alt_ball_contains(r, point, tau=TAU):
    """Closed ball of ``sigma_0(x1, 0) + |x2|`` in closed form.

    ``|x2| <= r`` on the line ``x1 = 0``, otherwise ``|x2| <= r - 1``
    (empty off the line when ``r < 1``).
    """
    if not r >= 0:
        raise ValueError("radius must be >= 0")
    x1, x2 = check_vector(point, "point")
    if abs(x1) <= check_tau(tau):
        return bool(abs(x2) <= r)
    return bool(abs(x2) <= r - 1.0)


def alt_metric(tau=TAU):
    return ProductMetric([Discrete(tau), Absolute()], 1)


class BallShape(enum.Enum):
    SINGLETON = "singleton"
    WHOLE_SPACE = "whole-space"


def discrete_ball_cases(r):
    """Shape of the closed ball of radius ``r`` under the discrete metric.

    Radii below 1 give just the center; ``r <= 0`` is included there since
    only the center is at distance 0.
    """
    return BallShape.WHOLE_SPACE if r >= 1 else BallShape.SINGLETON


@dataclass
class ChordWitness:
    x: np.ndarray
    y: np.ndarray
    t: float
    magnitude: float


def ball_chord_check(ball, n_dirs=64, trials=1000, tol=1e-9, seed=None):
    """Look for a chord of a planar ball that leaves the ball.

    Endpoints are taken from the boundary; the axis-aligned boundary pairs
    are tried first at ``t = 1/2``, then random pairs with random ``t``.
    Returns the first :class:`ChordWitness` found or ``None``.
    """
    pts = ball_boundary_sample_2d(ball, n_dirs, tol=min(tol, 1e-9))
    r = ball.radius

    def excess(x, y, t):
        return ball.distance(t * x + (1 - t) * y) - r

    axis_ids = [k * n_dirs // 4 for k in range(4)] if n_dirs % 4 == 0 else []
    for i, j in zip(axis_ids, axis_ids[1:] + axis_ids[:1]):
        e = excess(pts[i], pts[j], 0.5)
        if e > tol:
            return ChordWitness(pts[i], pts[j], 0.5, e)

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        i, j = rng.integers(0, n_dirs, size=2)
        t = rng.uniform()
        e = excess(pts[i], pts[j], t)
        if e > tol:
            return ChordWitness(pts[i], pts[j], t, e)
    return None
