"""Exact l0 minimisation for small underdetermined systems ``A x = b``.

The sparsest solution is found by enumerating supports in order of
cardinality and solving a least-squares problem on each; this is
exponential in ``n`` and capped at ``MAX_COLUMNS`` columns.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
import scipy.linalg

from ._validation import TAU, check_exponent_01, check_tau, check_vector
from .exceptions import DimensionMismatchError, InfeasibleError
from .product import ds_distance, support_distance

MAX_COLUMNS = 24
RESIDUAL_TOL = 1e-8
EXACT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LinearSystem:
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        if A.ndim != 2 or 0 in A.shape:
            raise ValueError(f"A must be a nonempty matrix, got shape {A.shape}")
        if not np.all(np.isfinite(A)):
            raise ValueError("A contains non-finite entries")
        b = check_vector(self.b, "b")
        if b.shape[0] != A.shape[0]:
            raise DimensionMismatchError(
                f"A has {A.shape[0]} rows but b has {b.shape[0]} entries"
            )
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def shape(self):
        return self.A.shape

    def residual(self, x):
        return float(np.linalg.norm(self.A @ x - self.b))


@dataclass(frozen=True, eq=False)
class SparseSolution:
    """A solution vector with its support (0-based) and Euclidean residual."""

    x: np.ndarray
    support: tuple
    residual: float


def _solution(system, x, tau):
    support = tuple(int(i) for i in np.flatnonzero(np.abs(x) > tau))
    return SparseSolution(x, support, system.residual(x))


def l0_min_bruteforce(system, residual_tol=RESIDUAL_TOL, max_support=None, tau=TAU):
    """Sparsest ``x`` with ``||A x - b||_2 <= residual_tol``.

    Supports are visited by increasing size and lexicographically within a
    size, so the first feasible one is both minimal and the smallest in
    lexicographic order. Each subproblem is solved with an SVD-based
    least-squares routine, which gives the minimum-norm answer when the
    selected columns are rank deficient.

    Raises
    ------
    InfeasibleError
        If no support of size ``<= max_support`` is feasible. The error
        carries the best residual that was seen.
    """
    m, n = system.shape
    if n > MAX_COLUMNS:
        raise ValueError(f"brute force is limited to {MAX_COLUMNS} columns, got {n}")
    if not residual_tol > 0:
        raise ValueError("residual_tol must be positive")
    tau = check_tau(tau)
    max_support = n if max_support is None else int(max_support)
    if not 0 <= max_support <= n:
        raise ValueError(f"max_support must lie in [0, {n}]")

    A, b = system.A, system.b
    best = float(np.linalg.norm(b))
    if best <= residual_tol:
        return _solution(system, np.zeros(n), tau)
    for k in range(1, max_support + 1):
        for cols in combinations(range(n), k):
            idx = list(cols)
            coef = np.linalg.lstsq(A[:, idx], b, rcond=None)[0]
            x = np.zeros(n)
            x[idx] = coef
            res = system.residual(x)
            if res <= residual_tol:
                return _solution(system, x, tau)
            best = min(best, res)
    raise InfeasibleError(
        f"no support of size <= {max_support} reaches residual {residual_tol:g}",
        best_residual=best,
    )


def null_space_basis(A, rcond=None):
    """Orthonormal basis of ``ker A`` from a pivoted QR of ``A.T``."""
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    Q, R, _ = scipy.linalg.qr(A.T, pivoting=True)
    diag = np.abs(np.diag(R))
    if rcond is None:
        rcond = max(m, n) * np.finfo(float).eps
    rank = int(np.sum(diag > rcond * diag[0])) if diag.size and diag[0] > 0 else 0
    return Q[:, rank:]


def solution_space_sample(system, count, seed=None):
    """Random exact solutions of a consistent system.

    Each sample is the minimum-norm solution plus a standard-normal
    combination of an orthonormal null-space basis.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    A, b = system.A, system.b
    xp = np.linalg.lstsq(A, b, rcond=None)[0]
    res = system.residual(xp)
    if res > EXACT_TOL:
        raise InfeasibleError("system is inconsistent", best_residual=res)
    N = null_space_basis(A)
    rng = np.random.default_rng(seed)
    return [xp + N @ rng.standard_normal(N.shape[1]) for _ in range(count)]


def sparsity_profile(x, s_values, tau=TAU):
    """``[(s, d_s(x, 0)) for s in s_values]`` and ``||x||_0``."""
    x = check_vector(x)
    zero = np.zeros_like(x)
    profile = [(check_exponent_01(s), ds_distance(s, x, zero)) for s in s_values]
    return profile, support_distance(x, zero, tau)


@dataclass
class SurrogateReport:
    s: float
    agreement: bool
    surrogate_minimizer: SparseSolution
    l0_minimizer: SparseSolution
    table: list = field(default_factory=list)  # (d_s, ||x||_0) per candidate


def surrogate_ranking_experiment(system, s, samples=100, seed=None,
                                 residual_tol=RESIDUAL_TOL, tau=TAU,
                                 extra_candidates=()):
    """Compare the d_s minimiser over exact solutions with the l0 optimum.

    Candidates are the brute-force l0 solution, ``samples`` random exact
    solutions and any ``extra_candidates``. ``agreement`` is true when the
    candidate with the smallest ``d_s(x, 0)`` has the same support as the
    l0 optimum.
    """
    s = check_exponent_01(s)
    best = l0_min_bruteforce(system, residual_tol=residual_tol, tau=tau)
    candidates = [best.x]
    if samples:
        candidates += solution_space_sample(system, samples, seed)
    candidates += [check_vector(c, "candidate") for c in extra_candidates]

    zero = np.zeros(system.shape[1])
    table = [(ds_distance(s, x, zero), support_distance(x, zero, tau)) for x in candidates]
    winner = min(range(len(candidates)), key=lambda i: table[i][0])
    surrogate = _solution(system, candidates[winner], tau)
    return SurrogateReport(
        s=s,
        agreement=surrogate.support == best.support,
        surrogate_minimizer=surrogate,
        l0_minimizer=best,
        table=table,
    )
