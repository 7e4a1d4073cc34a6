"""p-norms, the f_p / g_s gauge families, and numerical property checks.

``f_p(x) = (sum |x_i|^p)^(1/p)`` is positively homogeneous for every
``p > 0`` but convex only for ``p >= 1``. ``g_s(x) = sum |x_i|^s`` is the
``d_s`` distance to the origin; it is homogeneous only at ``s = 1``.
The checkers here falsify convexity and homogeneity by sampling, after first
trying a short list of fixed witnesses that expose the known failures.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_order, check_pair, check_vector
from .exceptions import OracleContractError

_MINKOWSKI_ITERS = 200


def p_norm(x, p):
    """The p-norm for ``p >= 1`` or ``p = inf``; smaller ``p`` is rejected."""
    return float(np.linalg.norm(check_vector(x), ord=check_order(p)))


@dataclass(frozen=True)
class Gauge:
    """``family="f"`` for ``f_p``, ``family="g"`` for the power sum ``g_s``."""

    family: str
    exponent: float

    def __post_init__(self):
        if self.family not in ("f", "g"):
            raise ValueError(f"gauge family must be 'f' or 'g', got {self.family!r}")
        e = float(self.exponent)
        if not (e > 0 and math.isfinite(e)):
            raise ValueError(f"gauge exponent must be > 0, got {self.exponent}")
        object.__setattr__(self, "exponent", e)

    def __call__(self, x):
        a = np.abs(np.asarray(x, dtype=float))
        total = float(np.sum(a ** self.exponent))
        if self.family == "g":
            return total
        return total ** (1.0 / self.exponent)

    def descriptor(self):
        return f"{self.family}:{self.exponent!r}"


def parse_gauge(text):
    family, _, exponent = text.strip().lower().partition(":")
    if not exponent:
        raise ValueError(f"gauge descriptor must look like 'f:0.5', got {text!r}")
    return Gauge(family, float(exponent))


def gauge_value(spec, x):
    return spec(check_vector(x))


@dataclass
class ConvexityWitness:
    kind: str  # "convexity" or "non-finite"
    x: np.ndarray
    y: np.ndarray
    t: float
    magnitude: float


@dataclass
class HomogeneityWitness:
    kind: str  # "homogeneity" or "non-finite"
    scale: float
    x: np.ndarray
    magnitude: float


def _axis_midpoints(dim):
    eye = np.eye(dim)
    for i in range(dim):
        for j in range(i + 1, dim):
            yield eye[i], eye[j], 0.5


def check_convexity(f, dim, low=-1.0, high=1.0, trials=10_000, tol=1e-9, seed=None,
                    use_witnesses=True):
    """Return the first triple violating convexity of ``f``, or ``None``.

    Tests ``f(t x + (1-t) y) <= t f(x) + (1-t) f(y) + tol``. Unless
    ``use_witnesses`` is off, the midpoints of pairs of unit axis vectors are
    tried before ``trials`` random triples with ``x, y`` uniform in
    ``[low, high]^dim`` and ``t`` uniform in [0, 1].
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)

    def test(x, y, t):
        lhs = f(t * x + (1 - t) * y)
        rhs = t * f(x) + (1 - t) * f(y)
        if not (np.isfinite(lhs) and np.isfinite(rhs)):
            return ConvexityWitness("non-finite", x, y, t, math.inf)
        if lhs > rhs + tol:
            return ConvexityWitness("convexity", x, y, t, float(lhs - rhs))
        return None

    for x, y, t in _axis_midpoints(dim) if use_witnesses else ():
        w = test(x, y, t)
        if w is not None:
            return w
    for _ in range(trials):
        x = rng.uniform(low, high, dim)
        y = rng.uniform(low, high, dim)
        w = test(x, y, rng.uniform())
        if w is not None:
            return w
    return None


def _scale_witnesses(dim):
    e1 = np.zeros(dim)
    e1[0] = 1.0
    return [(4.0, e1), (-3.0, np.ones(dim)), (0.5, e1)]


def check_homogeneity(f, dim, low=-1.0, high=1.0, trials=10_000, tol=1e-9,
                      scale_range=5.0, seed=None):
    """Return the first ``(scale, x)`` with ``f(scale*x) != |scale| f(x)``.

    The comparison is relative: a gap counts when it exceeds
    ``tol * max(1, |f(scale*x)|, |scale| f(x))``. Scales are drawn uniformly
    from ``[-scale_range, scale_range]``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)

    def test(lam, x):
        a, b = f(lam * x), abs(lam) * f(x)
        if not (np.isfinite(a) and np.isfinite(b)):
            return HomogeneityWitness("non-finite", lam, x, math.inf)
        gap = abs(a - b)
        if gap > tol * max(1.0, abs(a), abs(b)):
            return HomogeneityWitness("homogeneity", lam, x, float(gap))
        return None

    for lam, x in _scale_witnesses(dim):
        w = test(lam, x)
        if w is not None:
            return w
    for _ in range(trials):
        w = test(rng.uniform(-scale_range, scale_range), rng.uniform(low, high, dim))
        if w is not None:
            return w
    return None


class NormMetric:
    """``d(x, y) = ||x - y||_p``."""

    def __init__(self, p):
        self.p = check_order(p)

    def __call__(self, x, y):
        x, y = check_pair(x, y)
        return p_norm(x - y, self.p)

    def __repr__(self):
        return f"NormMetric(p={self.p!r})"


def metric_from_norm(p):
    return NormMetric(p)


class InducedGauge:
    """``x -> d(x, 0)`` for a distance function ``d``."""

    def __init__(self, metric):
        self.metric = metric

    def __call__(self, x):
        x = check_vector(x)
        return self.metric(x, np.zeros_like(x))


@dataclass
class NormWitness:
    prop: str  # "translation" or "homogeneity"
    points: tuple
    magnitude: float


@dataclass
class NormInduction:
    """Outcome of :func:`norm_candidate_from_metric`.

    ``gauge`` is set when no witness was found, ``witness`` otherwise.
    """

    is_norm_induced: bool
    gauge: object = None
    witness: NormWitness = None


def norm_candidate_from_metric(d, dim, low=-1.0, high=1.0, trials=1000,
                               tol=1e-9, seed=None):
    """Check whether ``x -> d(x, 0)`` is a norm for the metric ``d``.

    A metric induces a norm this way when it is translation invariant,
    ``d(x+z, y+z) = d(x, y)``, and homogeneous, ``d(a x, 0) = |a| d(x, 0)``.
    Both are tested on fixed witnesses and then on random samples; the
    comparisons use the same relative tolerance as :func:`check_homogeneity`.
    """
    rng = np.random.default_rng(seed)
    zero = np.zeros(dim)
    gauge = InducedGauge(d)

    def close(a, b):
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))

    def test_scale(lam, x):
        a, b = d(lam * x, zero), abs(lam) * d(x, zero)
        if not close(a, b):
            return NormWitness("homogeneity", (lam, x), abs(a - b))
        return None

    def test_shift(x, y, z):
        a, b = d(x + z, y + z), d(x, y)
        if not close(a, b):
            return NormWitness("translation", (x, y, z), abs(a - b))
        return None

    for lam, x in _scale_witnesses(dim):
        w = test_scale(lam, x)
        if w is not None:
            return NormInduction(False, witness=w)
    for _ in range(trials):
        x, y, z = rng.uniform(low, high, (3, dim))
        w = test_shift(x, y, z) or test_scale(rng.uniform(-5.0, 5.0), x)
        if w is not None:
            return NormInduction(False, witness=w)
    return NormInduction(True, gauge=gauge)


@dataclass(frozen=True)
class ConvexBody:
    """Membership oracle for a convex, symmetric, open body ``K``.

    The caller guarantees ``B(0, inner_radius) <= K <= B(0, outer_radius)``
    for open Euclidean balls.
    """

    membership: object
    inner_radius: float
    outer_radius: float

    def __post_init__(self):
        if not (0 < self.inner_radius <= self.outer_radius < math.inf):
            raise ValueError("need 0 < inner_radius <= outer_radius < inf")

    def __contains__(self, x):
        return bool(self.membership(x))


def open_pnorm_ball(p, dim):
    """The open unit p-norm ball as a :class:`ConvexBody`."""
    p = check_order(p)
    # Euclidean norm of the p-ball's "corner" direction is dim^(1/2 - 1/p)
    corner = dim ** (0.5 - (0.0 if p == math.inf else 1.0 / p))
    return ConvexBody(
        lambda x: p_norm(x, p) < 1.0,
        inner_radius=min(1.0, corner),
        outer_radius=max(1.0, corner),
    )


def minkowski_functional(body, x, tol=1e-9):
    """``inf{lam > 0 : x in lam * K}`` by bisection.

    The search starts from the bracket ``[|x|_2 / R, |x|_2 / r + tol]``
    implied by the body's radii; the result is within ``tol`` of the
    infimum. A body that is not inside its outer ball, or does not contain
    its inner ball, raises :class:`OracleContractError`.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    x = check_vector(x)
    norm2 = float(np.linalg.norm(x))
    if norm2 == 0.0:
        return 0.0
    # pad so the bracket ends sit strictly off the two spheres despite rounding
    lo = norm2 / body.outer_radius / (1 + 1e-12)
    hi = norm2 / body.inner_radius * (1 + 1e-12) + tol
    if x / hi not in body:
        raise OracleContractError("x is outside lam*K at the upper bracket")
    if x / lo in body:
        raise OracleContractError("x is inside lam*K at the lower bracket")
    for _ in range(_MINKOWSKI_ITERS):
        if hi - lo <= 2 * tol:
            break
        mid = 0.5 * (lo + hi)
        if x / mid in body:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
