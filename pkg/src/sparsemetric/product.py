"""p-metrics on Cartesian products of real lines.

A :class:`ProductMetric` combines per-coordinate scalar metrics ``rho_i``
with an exponent ``p``::

    d(x, y) = (sum_i rho_i(x_i, y_i) ** p) ** (1 / p)    1 <= p < inf
    d(x, y) = max_i rho_i(x_i, y_i)                      p = inf

Metrics are plain callables on 1-D arrays, so they can be handed to
``sklearn.metrics.pairwise_distances`` or ``NearestNeighbors`` as
``metric=``.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._validation import TAU, check_exponent_01, check_order, check_pair, check_tau
from .exceptions import DimensionMismatchError
from .scalar import Absolute, Discrete, Power, ScalarMetric, parse_scalar_metric


@dataclass(frozen=True, eq=False)
class ProductMetric:
    """Product metric over scalar components.

    Parameters
    ----------
    components : ScalarMetric or sequence of ScalarMetric
        A single metric is applied to every coordinate (any dimension).
        A sequence fixes the dimension to its length.
    p : float or "inf"
        Combination exponent, ``>= 1`` or infinity.
    """

    components: object
    p: float = 1.0

    def __post_init__(self):
        comps = self.components
        if not isinstance(comps, ScalarMetric):
            comps = tuple(comps)
            if not comps:
                raise ValueError("at least one component metric is required")
            if not all(isinstance(c, ScalarMetric) for c in comps):
                raise TypeError("components must be ScalarMetric instances")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "p", check_order(self.p))

    @property
    def dim(self):
        """Fixed dimension, or ``None`` for a homogeneous metric."""
        if isinstance(self.components, ScalarMetric):
            return None
        return len(self.components)

    def component(self, i):
        """Scalar metric on coordinate ``i`` (0-based)."""
        if isinstance(self.components, ScalarMetric):
            return self.components
        return self.components[i]

    def component_list(self, n):
        if isinstance(self.components, ScalarMetric):
            return [self.components] * n
        return list(self.components)

    @property
    def has_discrete(self):
        comps = self.component_list(self.dim or 1)
        return any(isinstance(c, Discrete) for c in comps)

    def coordinate_distances(self, x, y):
        if isinstance(self.components, ScalarMetric):
            return self.components(x, y)
        if len(x) != len(self.components):
            raise DimensionMismatchError(
                f"metric has {len(self.components)} components, "
                f"vectors have {len(x)} coordinates"
            )
        return np.array([float(c(a, b)) for c, a, b in zip(self.components, x, y)])

    def combine(self, terms):
        if self.p == math.inf:
            return float(np.max(terms))
        if self.p == 1.0:
            return float(np.sum(terms))
        return float(np.sum(terms ** self.p) ** (1.0 / self.p))

    def __call__(self, x, y):
        x, y = check_pair(x, y)
        return self.combine(self.coordinate_distances(x, y))

    def descriptor(self):
        comps = self.components
        if isinstance(comps, ScalarMetric):
            text = comps.descriptor()
        else:
            text = ",".join(c.descriptor() for c in comps)
        p = "inf" if self.p == math.inf else repr(self.p)
        return f"{text};p={p}"

    def __repr__(self):
        return f"ProductMetric({self.descriptor()})"


def parse_product_metric(metric, p=1.0, tau=TAU):
    """Build a metric from a comma-separated descriptor such as ``"disc,abs"``."""
    parts = [s for s in metric.split(",") if s.strip()]
    if not parts:
        raise ValueError("empty metric descriptor")
    comps = [parse_scalar_metric(s, tau) for s in parts]
    return ProductMetric(comps if len(comps) > 1 else comps[0], p)


def euclidean():
    return ProductMetric(Absolute(), 2)


def ds_metric(s):
    """``d_s(x, y) = sum_i |x_i - y_i| ** s`` as a product metric."""
    return ProductMetric(Power(check_exponent_01(s)), 1)


def support_metric(tau=TAU):
    """Counting metric ``#{i : x_i != y_i}`` (the s -> 0 limit of d_s)."""
    return ProductMetric(Discrete(tau), 1)


def product_distance(spec, x, y):
    return spec(x, y)


def ds_distance(s, x, y):
    """Sum of ``|x_i - y_i| ** s`` for ``0 < s <= 1``.

    >>> ds_distance(0.5, [0, 0], [4, 9])
    5.0
    """
    return ds_metric(s)(x, y)


def support_distance(x, y, tau=TAU):
    """Number of coordinates where ``|x_i - y_i| > tau``."""
    x, y = check_pair(x, y)
    return int(np.count_nonzero(np.abs(x - y) > check_tau(tau)))


class LimitScan(NamedTuple):
    trajectory: list
    d0: int


def limit_scan(x, y, s_values, tau=TAU):
    """Evaluate ``d_s(x, y)`` along a decreasing list of exponents.

    Returns the ``(s, d_s)`` trajectory together with the counting distance,
    which is its limit as ``s -> 0+``.
    """
    s_values = [check_exponent_01(s) for s in s_values]
    if not s_values:
        raise ValueError("s_values must be nonempty")
    if any(b >= a for a, b in zip(s_values, s_values[1:])):
        raise ValueError("s_values must be strictly decreasing")
    x, y = check_pair(x, y)
    traj = [(s, ds_distance(s, x, y)) for s in s_values]
    return LimitScan(traj, support_distance(x, y, tau))


def embedding_compatibility_check(spec, anchor, coordinate, pairs):
    """Largest gap between the product metric and one of its components.

    Two vectors equal to ``anchor`` except at ``coordinate`` (1-based) are
    compared with ``spec``; the result should match the component metric on
    that coordinate exactly.
    """
    anchor = np.asarray(anchor, dtype=float)
    n = anchor.shape[0]
    if spec.dim is not None and spec.dim != n:
        raise DimensionMismatchError(f"anchor has {n} coordinates, metric {spec.dim}")
    if not 1 <= coordinate <= n:
        raise IndexError(f"coordinate {coordinate} outside 1..{n}")
    i = coordinate - 1
    rho = spec.component(i)
    worst = 0.0
    for t, t2 in pairs:
        u = anchor.copy()
        v = anchor.copy()
        u[i] = t
        v[i] = t2
        worst = max(worst, abs(spec(u, v) - float(rho(t, t2))))
    return worst
