"""scikit-learn wrappers around the sparse harness.

:class:`L0Regressor` treats ``A`` as the design matrix and ``b`` as the
target, so ``fit(A, b)`` computes the sparsest exact solution and exposes it
as ``coef_``. :class:`SparsityProfile` maps each row of ``X`` to its d_s
values and l0 count, for use inside a ``Pipeline``.
"""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from ._validation import TAU, check_exponent_01
from .product import ds_distance, support_distance
from .sparse import RESIDUAL_TOL, LinearSystem, l0_min_bruteforce


class L0Regressor(RegressorMixin, BaseEstimator):
    """Sparsest coefficient vector that reproduces the targets exactly.

    Parameters
    ----------
    residual_tol : float, default=1e-8
        Largest accepted Euclidean residual ``||X coef - y||_2``.
    max_support : int or None, default=None
        Largest support size to enumerate; ``None`` means all columns.
    tau : float, default=1e-9
        Coefficients with ``|c| <= tau`` count as zero in ``support_``.

    Attributes
    ----------
    coef_ : ndarray of shape (n_features,)
    support_ : tuple of int
        0-based indices of the nonzero coefficients.
    residual_ : float
    n_features_in_ : int
    """

    def __init__(self, residual_tol=RESIDUAL_TOL, max_support=None, tau=TAU):
        self.residual_tol = residual_tol
        self.max_support = max_support
        self.tau = tau

    def fit(self, X, y):
        X, y = validate_data(self, X, y, y_numeric=True)
        sol = l0_min_bruteforce(
            LinearSystem(X, y),
            residual_tol=self.residual_tol,
            max_support=self.max_support,
            tau=self.tau,
        )
        self.coef_ = sol.x
        self.support_ = sol.support
        self.residual_ = sol.residual
        return self

    def predict(self, X):
        check_is_fitted(self)
        X = validate_data(self, X, reset=False)
        return X @ self.coef_


class SparsityProfile(TransformerMixin, BaseEstimator):
    """Per-row sparsity measures ``[d_s(x, 0) for s in s_values] + [||x||_0]``.

    Stateless apart from recording ``n_features_in_``.
    """

    def __init__(self, s_values=(1.0, 0.5, 0.1, 0.01), tau=TAU):
        self.s_values = s_values
        self.tau = tau

    def fit(self, X, y=None):
        validate_data(self, X)
        for s in self.s_values:
            check_exponent_01(s)
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = validate_data(self, X, reset=False)
        out = np.empty((X.shape[0], len(self.s_values) + 1))
        for i, row in enumerate(X):
            zero = np.zeros_like(row)
            out[i, :-1] = [ds_distance(s, row, zero) for s in self.s_values]
            out[i, -1] = support_distance(row, zero, self.tau)
        return out

    def get_feature_names_out(self, input_features=None):
        names = [f"d_s={s:g}" for s in self.s_values] + ["l0"]
        return np.asarray(names, dtype=object)
