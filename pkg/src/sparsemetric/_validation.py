"""Light-weight input checks shared across modules.

Per-pair metric evaluation runs in tight loops, so these avoid the cost of
``sklearn.utils.check_array``; the estimator layer uses sklearn's helpers.
"""

import math

import numpy as np

from .exceptions import DimensionMismatchError

#: Default zero tolerance: two reals are equal iff ``|x - y| <= TAU``.
TAU = 1e-9


def check_vector(x, name="x"):
    """Return ``x`` as a finite 1-D float array."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must have at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_pair(x, y):
    x = check_vector(x, "x")
    y = check_vector(y, "y")
    if x.shape != y.shape:
        raise DimensionMismatchError(
            f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}"
        )
    return x, y


def check_tau(tau):
    tau = float(tau)
    if not tau >= 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    return tau


def check_order(p):
    """Normalise a product/norm exponent: a real ``>= 1`` or infinity.

    ``"inf"`` and ``math.inf`` both map to ``math.inf``, which every caller
    dispatches on explicitly (max semantics), never as a large float.
    """
    if isinstance(p, str):
        p = p.strip().lower()
        if p in ("inf", "infinity"):
            return math.inf
        p = float(p)
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ValueError(f"exponent p must be >= 1 or inf, got {p}")
    return p


def check_exponent_01(s, name="s"):
    s = float(s)
    if not (0 < s <= 1):
        raise ValueError(f"{name} must lie in (0, 1], got {s}")
    return s
