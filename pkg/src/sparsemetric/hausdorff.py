"""Hausdorff distance between finite point sets."""

import numpy as np

from .exceptions import DimensionMismatchError
from .product import euclidean


def check_point_set(points, name="points"):
    """Return a finite point set as an ``(n_points, dim)`` array.

    A flat sequence is read as points on the real line.
    """
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must be a nonempty list of points")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite coordinates")
    return arr


def _pairwise(K, A, metric):
    K = check_point_set(K, "K")
    A = check_point_set(A, "A")
    if K.shape[1] != A.shape[1]:
        raise DimensionMismatchError(
            f"point sets live in dimensions {K.shape[1]} and {A.shape[1]}"
        )
    if metric is None:
        metric = euclidean()
    return np.array([[metric(k, a) for a in A] for k in K])


def directed_hausdorff(K, A, metric=None):
    """``max over k in K of min over a in A of d(k, a)``.

    Every pair is evaluated; ``metric`` defaults to the Euclidean metric.
    """
    return float(_pairwise(K, A, metric).min(axis=1).max())


def hausdorff(K, A, metric=None):
    """Symmetric Hausdorff distance: the larger of the two directed values.

    >>> hausdorff([0, 1], [2])
    2.0
    """
    D = _pairwise(K, A, metric)
    return float(max(D.min(axis=1).max(), D.min(axis=0).max()))
