"""Distance measures from scalar metrics up to the l0 counting measure."""

__version__ = "0.1.0"

from ._validation import TAU
from .balls import (
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
from .exceptions import (
    ConvergenceError,
    DimensionMismatchError,
    InfeasibleError,
    NoInclusionRegimeError,
    OracleContractError,
    UnsupportedGeometryError,
)
from .hausdorff import directed_hausdorff, hausdorff
from .norms import (
    ConvexBody,
    Gauge,
    check_convexity,
    check_homogeneity,
    gauge_value,
    metric_from_norm,
    minkowski_functional,
    norm_candidate_from_metric,
    open_pnorm_ball,
    p_norm,
)
from .product import (
    ProductMetric,
    ds_distance,
    ds_metric,
    embedding_compatibility_check,
    euclidean,
    limit_scan,
    parse_product_metric,
    product_distance,
    support_distance,
    support_metric,
)
from .scalar import (
    Absolute,
    AxiomReport,
    Discrete,
    Power,
    check_metric_axioms,
    check_metric_axioms_exhaustive,
    scalar_distance,
)
from .sparse import (
    LinearSystem,
    SparseSolution,
    l0_min_bruteforce,
    solution_space_sample,
    sparsity_profile,
    surrogate_ranking_experiment,
)


def __getattr__(name):
    # keeps scikit-learn out of the CLI's import path
    if name in ("L0Regressor", "SparsityProfile"):
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
