"""scikit-learn style wrappers around the exact solver."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .solver import (
    PartitionDecomposition,
    count_min_super_dom,
    domination_number,
    enumerate_min_super_dom,
    partition_decomposition,
    super_domination_number,
)
from .validation import check_graph, check_vertex_set

FEATURES = ("gamma", "gamma_sp", "n_sp")


class SuperDominatingSet(BaseEstimator):
    """Minimum super dominating set of a single graph.

    Parameters
    ----------
    count : bool, default=False
        Also compute the number of minimum super dominating sets (``n_sets_``).
    enumerate_sets : bool, default=False
        Also list all of them (``sets_``), sorted lexicographically.
    n_jobs : int, default=1
        Worker processes used for counting.
    allow_large : bool, default=False
        Permit counting and enumeration above the size guard.

    Attributes
    ----------
    graph_ : Graph
    gamma_sp_ : int
    witness_ : VertexSet
        Lexicographically smallest minimum super dominating set.
    n_sets_ : int
    sets_ : list of VertexSet
    """

    def __init__(self, count=False, enumerate_sets=False, n_jobs=1, allow_large=False):
        self.count = count
        self.enumerate_sets = enumerate_sets
        self.n_jobs = n_jobs
        self.allow_large = allow_large

    def fit(self, X, y=None):
        g = check_graph(X)
        res = super_domination_number(g)
        self.graph_ = g
        self.n_features_in_ = g.n
        self.gamma_sp_ = res.value
        self.witness_ = res.witness
        if self.count:
            self.n_sets_ = count_min_super_dom(g, workers=self.n_jobs, allow_large=self.allow_large)
        if self.enumerate_sets:
            self.sets_ = enumerate_min_super_dom(g, allow_large=self.allow_large)
        return self

    def get_support(self, indices=False):
        check_is_fitted(self, "witness_")
        if indices:
            return np.array(self.witness_.to_list(), dtype=int)
        mask = np.zeros(self.graph_.n, dtype=bool)
        mask[self.witness_.to_list()] = True
        return mask

    def decompose(self, s=None) -> PartitionDecomposition:
        """Exchange decomposition of ``s`` (default: the fitted witness)."""
        check_is_fitted(self, "witness_")
        s = self.witness_ if s is None else check_vertex_set(self.graph_, s)
        return partition_decomposition(self.graph_, s)


class SuperDominationFeatures(TransformerMixin, BaseEstimator):
    """Map each graph of a collection to exact domination invariants.

    ``transform`` returns an integer array with one row per graph and one
    column per entry of ``features`` (any of ``gamma``, ``gamma_sp``,
    ``n_sp``).
    """

    def __init__(self, features=FEATURES, n_jobs=1, allow_large=False):
        self.features = features
        self.n_jobs = n_jobs
        self.allow_large = allow_large

    def _validate_features(self):
        features = tuple(self.features)
        unknown = [f for f in features if f not in FEATURES]
        if not features or unknown:
            raise ValueError(f"features must be a non-empty subset of {FEATURES}, got {features}")
        return features

    def fit(self, X=None, y=None):
        self.features_ = self._validate_features()
        return self

    def transform(self, X):
        check_is_fitted(self, "features_")
        rows = []
        for item in X:
            g = check_graph(item)
            row = []
            for name in self.features_:
                if name == "gamma":
                    row.append(domination_number(g).value)
                elif name == "gamma_sp":
                    row.append(super_domination_number(g).value)
                else:
                    row.append(count_min_super_dom(g, workers=self.n_jobs, allow_large=self.allow_large))
            rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(len(rows), len(self.features_))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "features_")
        return np.array(self.features_, dtype=object)
