"""Base metrics on the real line and a falsification search for metric axioms.

Three kinds of scalar metric are provided::

    Absolute()     |x - y|
    Power(s)       |x - y| ** s,  0 < s <= 1
    Discrete(tau)  1 if |x - y| > tau else 0

All of them are vectorised: calling one on arrays returns the elementwise
distances, which is what :mod:`sparsemetric.product` builds on.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from ._validation import TAU, check_tau

AXIOMS = ("nonnegativity", "identity", "symmetry", "triangle", "non-finite")


class ScalarMetric:
    """Base class; subclasses implement elementwise ``__call__``."""

    def __call__(self, x, y):  # pragma: no cover - abstract
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Absolute(ScalarMetric):
    def __call__(self, x, y):
        return np.abs(np.subtract(x, y, dtype=float))

    def descriptor(self):
        return "abs"


@dataclass(frozen=True)
class Power(ScalarMetric):
    """``|x - y| ** s`` for an exponent ``0 < s <= 1``.

    Exponents above 1 break the triangle inequality and are rejected.
    """

    s: float

    def __post_init__(self):
        s = float(self.s)
        if not (0 < s <= 1):
            raise ValueError(f"Power exponent must lie in (0, 1], got {s}")
        object.__setattr__(self, "s", s)

    def __call__(self, x, y):
        diff = np.abs(np.subtract(x, y, dtype=float))
        if self.s == 1.0:
            return diff
        # 0 ** s == 0 for s > 0, so no special casing of x == y is needed
        return np.power(diff, self.s)

    def descriptor(self):
        return f"pow:{self.s!r}"


@dataclass(frozen=True)
class Discrete(ScalarMetric):
    tau: float = TAU

    def __post_init__(self):
        object.__setattr__(self, "tau", check_tau(self.tau))

    def __call__(self, x, y):
        diff = np.abs(np.subtract(x, y, dtype=float))
        return (diff > self.tau).astype(float)

    def descriptor(self):
        return "disc"


def scalar_distance(kind, x, y):
    """Distance between two reals under a scalar metric ``kind``."""
    return float(kind(float(x), float(y)))


def parse_scalar_metric(text, tau=TAU):
    """Parse ``"abs"``, ``"pow:<s>"`` or ``"disc"`` into a metric."""
    text = text.strip().lower()
    if text == "abs":
        return Absolute()
    if text == "disc":
        return Discrete(tau)
    if text.startswith("pow:"):
        return Power(float(text[4:]))
    raise ValueError(f"unknown scalar metric descriptor {text!r}")


@dataclass
class Violation:
    axiom: str
    points: tuple
    magnitude: float


@dataclass
class AxiomReport:
    """Result of a metric-axiom falsification run.

    An empty ``violations`` list only means no counterexample was found.
    """

    violations: list = field(default_factory=list)
    trials_run: int = 0

    @property
    def ok(self):
        return not self.violations

    def by_axiom(self, axiom):
        return [v for v in self.violations if v.axiom == axiom]


def _is_different(x, y):
    return not np.array_equal(np.asarray(x), np.asarray(y))


def _check_triple(d, x, y, z, tol):
    vals = {
        "xy": d(x, y), "yx": d(y, x), "xz": d(x, z),
        "zy": d(z, y), "xx": d(x, x),
    }
    bad = [k for k, v in vals.items() if not np.isfinite(v)]
    if bad:
        return [Violation("non-finite", (x, y, z), float("inf"))]
    dxy, dyx, dxz, dzy, dxx = (float(vals[k]) for k in ("xy", "yx", "xz", "zy", "xx"))

    found = []
    if dxy < -tol:
        found.append(Violation("nonnegativity", (x, y), -dxy))
    if dxx > tol:
        found.append(Violation("identity", (x, x), dxx))
    elif dxy <= 0 and _is_different(x, y):
        gap = float(np.max(np.abs(np.subtract(x, y))))
        found.append(Violation("identity", (x, y), gap))
    if abs(dxy - dyx) > tol:
        found.append(Violation("symmetry", (x, y), abs(dxy - dyx)))
    excess = dxy - (dxz + dzy)
    if excess > tol:
        found.append(Violation("triangle", (x, y, z), excess))
    return found


def check_metric_axioms(d, low=-1.0, high=1.0, dim=None, trials=1000,
                        tol=1e-12, seed=None):
    """Search for metric-axiom violations over random triples.

    Parameters
    ----------
    d : callable
        Distance function ``d(x, y) -> float``.
    low, high : float
        Sampling box; every coordinate is drawn uniformly from ``[low, high]``.
    dim : int or None
        ``None`` samples scalars, otherwise vectors of length ``dim``.
    trials : int
        Number of random ``(x, y, z)`` triples.
    tol : float
        Absolute slack allowed before a check counts as a violation.
    seed : int or None
        Seed for :func:`numpy.random.default_rng`.

    Returns
    -------
    AxiomReport
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not high > low:
        raise ValueError("sampling box is empty")
    rng = np.random.default_rng(seed)
    shape = (trials, 3) if dim is None else (trials, 3, dim)
    draws = rng.uniform(low, high, size=shape)
    report = AxiomReport(trials_run=trials)
    for row in draws:
        x, y, z = (float(v) for v in row) if dim is None else row
        report.violations.extend(_check_triple(d, x, y, z, tol))
    return report


def check_metric_axioms_exhaustive(d, points, tol=1e-12):
    """Check every ordered triple drawn from a finite list of points."""
    points = list(points)
    if not points:
        raise ValueError("points must be nonempty")
    report = AxiomReport()
    for x, y, z in iproduct(points, repeat=3):
        report.trials_run += 1
        report.violations.extend(_check_triple(d, x, y, z, tol))
    return report
