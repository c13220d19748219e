"""scikit-learn wrapper for fusing ordinal answers.

``X`` holds one row per item (question, case, ...) and one column per
source (respondent, rater, sensor). Entries are ordinals ``1..n_states``;
``0`` or NaN marks a missing answer, which contributes a vacuous mass.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .combine import RULES, combine
from .decision import Criterion, conflict_multi, decide_distance, decide_pointwise
from .exceptions import InvalidParameter
from .frame import OrderedFrame, enumerate_ops, index_of, singleton
from .fuzzy import FuzzyParams
from .mass import MassFunction, categorical, vacuous
from .metric import ElementDistanceMode, dissimilarity_matrix

__all__ = ["OrderedEvidenceFusion"]


class OrderedEvidenceFusion(TransformerMixin, BaseEstimator):
    """Combine per-source ordinal answers into one mass function per row.

    Parameters
    ----------
    n_states : int or None
        Size of the ordered frame. Inferred from the largest answer in
        ``fit`` when None.
    rule : str
        Combination rule, one of ``conj``, ``dempster``, ``yager``,
        ``odisj``, ``odp``, ``avg`` or ``mixed`` (two sources only).
    discount : float
        Share of each answer moved to the whole frame before combining.
    kind : str
        Dissimilarity matrix for distances: ``plain``, ``ordered`` or ``fuzzy``.
    dmode : str
        Ordinal distance mode, ``min``, ``max`` or ``avg``.
    alpha, gamma : float
        Membership parameters, used by the ``fuzzy`` matrix and by ``mixed``.
    criterion : str
        ``bel``, ``pl``, ``betp`` or ``dist`` for :meth:`predict`.
    candidates : str
        ``singletons`` or ``all``; the decision set for ``criterion="dist"``.

    Attributes
    ----------
    frame_ : OrderedFrame
    matrix_ : DissimilarityMatrix
    elements_ : list of OrderedElement
        Column order of :meth:`transform`.
    n_features_in_ : int
    """

    def __init__(
        self,
        n_states=None,
        rule="avg",
        discount=0.0,
        kind="ordered",
        dmode="avg",
        alpha=0.5,
        gamma=1.0,
        criterion="betp",
        candidates="singletons",
    ):
        self.n_states = n_states
        self.rule = rule
        self.discount = discount
        self.kind = kind
        self.dmode = dmode
        self.alpha = alpha
        self.gamma = gamma
        self.criterion = criterion
        self.candidates = candidates

    def _validate_params(self):
        if self.rule not in RULES:
            raise InvalidParameter(f"unknown rule {self.rule!r}")
        if not 0.0 <= self.discount <= 1.0:
            raise InvalidParameter("discount must be in [0, 1]")
        if self.criterion != "dist":
            Criterion.coerce(self.criterion)
        if self.candidates not in ("singletons", "all"):
            raise InvalidParameter("candidates must be 'singletons' or 'all'")

    def _check_X(self, X, n_states=None):
        X = check_array(X, dtype=float, ensure_all_finite="allow-nan")
        X = np.nan_to_num(X, nan=0.0)
        if np.any(X != np.round(X)) or np.any(X < 0):
            raise ValueError("answers must be ordinals 1..n_states, or 0 / NaN for missing")
        X = X.astype(int)
        if n_states is not None and X.max(initial=0) > n_states:
            raise ValueError(f"answer {X.max()} exceeds n_states={n_states}")
        return X

    def fit(self, X, y=None):
        self._validate_params()
        X = self._check_X(X, self.n_states)
        n = self.n_states if self.n_states is not None else max(int(X.max(initial=0)), 1)
        self.frame_ = OrderedFrame(n)
        self.fuzzy_ = FuzzyParams(self.alpha, self.gamma, ElementDistanceMode.coerce(self.dmode))
        self.matrix_ = dissimilarity_matrix(self.frame_, self.kind, mode=self.dmode, params=self.fuzzy_)
        self.elements_ = enumerate_ops(n)
        self.n_features_in_ = X.shape[1]
        return self

    def _row_masses(self, row) -> list[MassFunction]:
        frame = self.frame_
        out = []
        for answer in row:
            if answer == 0:
                out.append(vacuous(frame))
            elif self.discount > 0.0:
                out.append(
                    MassFunction(frame, [(singleton(answer), 1.0 - self.discount), (frame.omega, self.discount)])
                )
            else:
                out.append(categorical(frame, singleton(answer)))
        return out

    def fuse(self, X) -> list[MassFunction]:
        """Fused mass function for every row of ``X``."""
        check_is_fitted(self, "frame_")
        X = self._check_X(X, self.frame_.n)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} sources, expected {self.n_features_in_}")
        fuzzy = self.fuzzy_ if self.rule == "mixed" else None
        return [combine(self._row_masses(row), self.rule, fuzzy=fuzzy) for row in X]

    def transform(self, X):
        """Mass vectors in canonical element order, shape (n_rows, 1 + n(n+1)/2)."""
        masses = self.fuse(X)
        return np.vstack([m.to_vector() for m in masses]) if masses else np.empty((0, len(self.elements_)))

    def predict(self, X):
        """Decided ordinal per row, or canonical element index with ``candidates="all"``."""
        masses = self.fuse(X)
        if self.criterion != "dist":
            return np.array([decide_pointwise(m, self.criterion) for m in masses], dtype=int)
        if self.candidates == "singletons":
            cands = self.frame_.singletons()
            return np.array([decide_distance(m, cands, self.matrix_).lo for m in masses], dtype=int)
        cands = [x for x in self.elements_ if not x.is_empty]
        return np.array([index_of(decide_distance(m, cands, self.matrix_)) for m in masses], dtype=int)

    def conflict(self, X):
        """Mean pairwise conflict between the sources of each row."""
        check_is_fitted(self, "frame_")
        X = self._check_X(X, self.frame_.n)
        return np.array([conflict_multi(self._row_masses(row), self.matrix_) for row in X])
