import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sklearn.metrics import pairwise_distances
from sklearn.neighbors import NearestNeighbors

from sparsemetric.exceptions import DimensionMismatchError
from sparsemetric.product import (
    ProductMetric,
    ds_distance,
    ds_metric,
    embedding_compatibility_check,
    limit_scan,
    parse_product_metric,
    product_distance,
    support_distance,
    support_metric,
)
from sparsemetric.scalar import Absolute, Discrete, Power, check_metric_axioms

coord = st.floats(-10, 10, allow_nan=False)
vec3 = st.lists(coord, min_size=3, max_size=3)
scalar_kinds = st.one_of(
    st.just(Absolute()), st.just(Discrete()), st.sampled_from([0.1, 0.25, 0.5, 1.0]).map(Power)
)
orders = st.sampled_from([1.0, 1.5, 2.0, 3.0, math.inf])


@pytest.mark.parametrize("spec, x, y, expected", [
    (ProductMetric(Absolute(), 2), (0, 0), (3, 4), 5.0),
    (ProductMetric([Discrete(), Absolute()], 1), (0, 0), (2, 3), 4.0),
    (ProductMetric(Absolute(), math.inf), (1, -2), (2, 5), 7.0),
    (ProductMetric(Absolute(), "inf"), (1, -2), (2, 5), 7.0),
])
def test_product_distance_examples(spec, x, y, expected):
    assert product_distance(spec, x, y) == expected


def test_product_rejects_small_order():
    with pytest.raises(ValueError):
        ProductMetric(Absolute(), 0.5)


def test_product_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        ProductMetric(Absolute(), 2)((0, 0), (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        ProductMetric([Absolute(), Discrete()], 1)((0, 0, 0), (1, 2, 3))


def test_parse_product_metric():
    m = parse_product_metric("disc,abs", 1)
    assert m.dim == 2
    assert m((0, 0), (2, 3)) == 4.0
    assert parse_product_metric("pow:0.5", "inf").dim is None


@pytest.mark.parametrize("s, x, y, expected", [
    (1, (1, 2), (0, 0), 3.0),
    (0.5, (0, 0), (4, 9), 5.0),
])
def test_ds_distance_examples(s, x, y, expected):
    assert ds_distance(s, x, y) == expected


def test_ds_distance_derived():
    # oracle: 2 * sqrt(0.2) evaluated at 30 digits
    assert ds_distance(0.5, (0.2, 0.2), (0, 0)) == pytest.approx(0.894427190999915878, abs=1e-15)


@pytest.mark.parametrize("s", [0, 1.5, -1])
def test_ds_rejects_bad_exponent(s):
    with pytest.raises(ValueError):
        ds_distance(s, (1,), (0,))


@pytest.mark.parametrize("x, y, expected", [
    ((1, 0, 2), (1, 0, 0), 1),
    ((0, 3, 0, -2), (0, 0, 0, 0), 2),
    ((4, 5), (4, 5), 0),
])
def test_support_distance_examples(x, y, expected):
    assert support_distance(x, y) == expected


@given(vec3, vec3)
def test_ds_one_equals_taxicab_exactly(x, y):
    assert ds_distance(1, x, y) == ProductMetric(Absolute(), 1)(x, y)


@given(vec3, vec3)
def test_support_equals_discrete_product(x, y):
    assert support_distance(x, y) == ProductMetric(Discrete(), 1)(x, y)


@given(vec3, vec3, st.sampled_from([1.0, 1.5, 2.0, 3.7]))
def test_discrete_product_is_root_of_count(x, y, p):
    assert ProductMetric(Discrete(), p)(x, y) == support_distance(x, y) ** (1 / p)


@settings(max_examples=200)
@given(st.lists(scalar_kinds, min_size=3, max_size=3), orders, vec3, coord, coord,
       st.integers(1, 3))
def test_compatibility_with_components(comps, p, anchor, t, t2, i):
    spec = ProductMetric(comps, p)
    assert embedding_compatibility_check(spec, anchor, i, [(t, t2)]) <= 1e-12


@pytest.mark.parametrize("spec, anchor, i, pair, value", [
    (ProductMetric(Absolute(), 2), (5, 5), 1, (1, 4), 3.0),
    (ProductMetric([Discrete(), Absolute()], 1), (0, 0), 2, (1, -1), 2.0),
    (ProductMetric(Power(0.5), 1), (9, 9, 9), 3, (0, 4), 2.0),
])
def test_compatibility_examples(spec, anchor, i, pair, value):
    assert embedding_compatibility_check(spec, anchor, i, [pair]) == 0.0
    assert float(spec.component(i - 1)(*pair)) == value


def test_compatibility_index_out_of_range():
    with pytest.raises(IndexError):
        embedding_compatibility_check(ProductMetric(Absolute(), 2), (0, 0), 3, [(0, 1)])
    with pytest.raises(IndexError):
        embedding_compatibility_check(ProductMetric(Absolute(), 2), (0, 0), 0, [(0, 1)])


def test_limit_scan_unit_difference():
    scan = limit_scan((1, 0), (0, 0), [1, 0.5, 0.1, 0.001])
    assert all(d == 1.0 for _, d in scan.trajectory)
    assert scan.d0 == 1


def test_limit_scan_derived():
    scan = limit_scan((0.5, 2), (0, 0), [0.001])
    (_, d), = scan.trajectory
    # oracle: 0.5**0.001 + 2**0.001 at 30 digits
    assert d == pytest.approx(2.00000048045303315, abs=1e-15)
    assert abs(d - 2) <= 2e-3
    assert scan.d0 == 2


def test_limit_scan_identity():
    scan = limit_scan((3, -1), (3, -1), [1, 0.5, 0.01])
    assert all(d == 0 for _, d in scan.trajectory) and scan.d0 == 0


def test_limit_scan_requires_decreasing():
    with pytest.raises(ValueError):
        limit_scan((1,), (0,), [0.1, 0.5])
    with pytest.raises(ValueError):
        limit_scan((1,), (0,), [])


@pytest.mark.parametrize("spec", [
    ProductMetric(Power(0.25), 2),
    ProductMetric([Discrete(), Absolute(), Power(0.5)], math.inf),
    ds_metric(0.1),
    support_metric(),
])
def test_product_metrics_pass_axiom_search(spec):
    assert check_metric_axioms(spec, -10, 10, dim=3, trials=2000, seed=2).ok


def test_usable_as_sklearn_metric():
    rng = np.random.default_rng(0)
    X = rng.integers(-2, 3, (12, 4)).astype(float)
    D = pairwise_distances(X, metric=support_metric())
    expected = [[support_distance(a, b) for b in X] for a in X]
    assert np.array_equal(D, expected)

    nn = NearestNeighbors(n_neighbors=2, metric=ds_metric(0.5), algorithm="brute").fit(X)
    dist, _ = nn.kneighbors(X)
    assert np.all(dist[:, 0] == 0)
