"""Distances between ordered elements and between mass functions.

Three dissimilarity matrices are available over the canonical enumeration
of the ordered power set:

``plain``
    Jaccard index ``|A & B| / |A | B|``, the usual Jousselme weighting.
``ordered``
    Jaccard plus a bonus in ``[0, 1/n]`` for disjoint pairs that shrinks with
    their ordinal distance, so ``w1`` is closer to ``w2`` than to ``w3``.
``fuzzy``
    Jaccard with the intersection cardinality replaced by the fuzzy
    cardinality of :mod:`ordbelief.fuzzy`.

In every kind the empty set is similar only to itself.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exceptions import EmptyElement, FrameMismatch, InvalidParameter, NegativeQuadraticForm
from .frame import OrderedElement, OrderedFrame, enumerate_ops, index_of, intersect, ordered_union
from .mass import MassFunction, check_same_frame

__all__ = [
    "DissimilarityMatrix",
    "ElementDistanceMode",
    "belief_distance",
    "d_elem",
    "d_set",
    "d_singleton",
    "dissimilarity_matrix",
    "fuzzy_matrix",
    "jaccard_matrix",
    "ordered_matrix",
]

_TOL = 1e-9


class ElementDistanceMode(str, enum.Enum):
    MIN = "min"
    MAX = "max"
    AVERAGE = "avg"

    @classmethod
    def coerce(cls, value) -> ElementDistanceMode:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter(f"unknown distance mode {value!r}; use min, max or avg") from None


def d_singleton(i: int, j: int, n: int) -> float:
    """Normalized ordinal distance ``|i - j| / (n - 1)``; 0 on a one-state frame."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"ordinals ({i}, {j}) out of range 1..{n}")
    if n == 1:
        return 0.0
    return abs(i - j) / (n - 1)


def _check_nonempty(*elems: OrderedElement):
    for x in elems:
        if x.is_empty:
            raise EmptyElement("distance to the empty set is undefined")


def d_elem(i: int, x: OrderedElement, n: int, mode=ElementDistanceMode.AVERAGE) -> float:
    """Distance from state ``w_i`` to the element ``x``.

    ``min`` and ``max`` look only at the two endpoints of ``x``, so with
    ``min`` a state strictly inside a long interval is not at distance 0.
    """
    _check_nonempty(x)
    mode = ElementDistanceMode.coerce(mode)
    if mode is ElementDistanceMode.MIN:
        return min(d_singleton(i, x.lo, n), d_singleton(i, x.hi, n))
    if mode is ElementDistanceMode.MAX:
        return max(d_singleton(i, x.lo, n), d_singleton(i, x.hi, n))
    return math.fsum(d_singleton(i, k, n) for k in x) / len(x)


def d_set(x: OrderedElement, y: OrderedElement, n: int, mode=ElementDistanceMode.AVERAGE) -> float:
    """Distance between two non-empty elements.

    ``min`` is the smallest gap between members (0 when they overlap),
    ``max`` the largest, ``avg`` the mean over all ``|x| * |y|`` member pairs.
    """
    _check_nonempty(x, y)
    mode = ElementDistanceMode.coerce(mode)
    if n == 1:
        return 0.0
    if mode is ElementDistanceMode.MIN:
        return max(0, y.lo - x.hi, x.lo - y.hi) / (n - 1)
    if mode is ElementDistanceMode.MAX:
        return max(y.hi - x.lo, x.hi - y.lo) / (n - 1)
    total = math.fsum(abs(a - b) for a in x for b in y)
    return total / (len(x) * len(y) * (n - 1))


@dataclass(frozen=True, eq=False)
class DissimilarityMatrix:
    """Square similarity weights indexed by the canonical enumeration."""

    frame: OrderedFrame
    kind: str
    entries: np.ndarray = field(repr=False)
    mode: ElementDistanceMode | None = None
    params: object = None

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    def entry(self, a: OrderedElement, b: OrderedElement) -> float:
        return float(self.entries[index_of(a), index_of(b)])

    def labels(self) -> list[str]:
        return [str(x) for x in enumerate_ops(self.frame.n)]


def _jaccard(a: OrderedElement, b: OrderedElement) -> float:
    return len(intersect(a, b)) / len(ordered_union(a, b))


def _build(n: int, entry) -> np.ndarray:
    elems = enumerate_ops(n)
    size = len(elems)
    out = np.zeros((size, size))
    out[0, 0] = 1.0
    for i in range(1, size):
        for j in range(i, size):
            out[i, j] = out[j, i] = entry(elems[i], elems[j])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _plain_entries(n: int) -> np.ndarray:
    return _build(n, _jaccard)


@lru_cache(maxsize=None)
def _ordered_entries(n: int, mode: ElementDistanceMode) -> np.ndarray:
    def entry(a, b):
        if not intersect(a, b).is_empty:
            return _jaccard(a, b)
        return (1.0 - d_set(a, b, n, mode)) / n

    return _build(n, entry)


@lru_cache(maxsize=None)
def _fuzzy_entries(n: int, params) -> np.ndarray:
    from .fuzzy import fuzzy_intersection_cardinality

    def entry(a, b):
        return fuzzy_intersection_cardinality(a, b, n, params) / len(ordered_union(a, b))

    return _build(n, entry)


def _frame(frame) -> OrderedFrame:
    return frame if isinstance(frame, OrderedFrame) else OrderedFrame(int(frame))


def jaccard_matrix(frame) -> DissimilarityMatrix:
    frame = _frame(frame)
    return DissimilarityMatrix(frame, "plain", _plain_entries(frame.n))


def ordered_matrix(frame, mode=ElementDistanceMode.AVERAGE) -> DissimilarityMatrix:
    frame = _frame(frame)
    mode = ElementDistanceMode.coerce(mode)
    return DissimilarityMatrix(frame, "ordered", _ordered_entries(frame.n, mode), mode=mode)


def fuzzy_matrix(frame, params=None) -> DissimilarityMatrix:
    from .fuzzy import FuzzyParams

    frame = _frame(frame)
    params = FuzzyParams() if params is None else params
    return DissimilarityMatrix(
        frame, "fuzzy", _fuzzy_entries(frame.n, params), mode=params.mode, params=params
    )


def dissimilarity_matrix(frame, kind: str = "ordered", mode=ElementDistanceMode.AVERAGE, params=None):
    """Dispatch on ``kind`` (``plain``, ``ordered`` or ``fuzzy``)."""
    if kind == "plain":
        return jaccard_matrix(frame)
    if kind == "ordered":
        return ordered_matrix(frame, mode)
    if kind == "fuzzy":
        if params is None:
            from .fuzzy import FuzzyParams

            params = FuzzyParams(mode=ElementDistanceMode.coerce(mode))
        return fuzzy_matrix(frame, params)
    raise InvalidParameter(f"unknown matrix kind {kind!r}; use plain, ordered or fuzzy")


def belief_distance(m1: MassFunction, m2: MassFunction, matrix: DissimilarityMatrix) -> float:
    """``sqrt(0.5 * (m1 - m2)^T D (m1 - m2))`` with ``D`` from ``matrix``."""
    frame = check_same_frame(m1, m2)
    if matrix.frame.n != frame.n:
        raise FrameMismatch(f"matrix built for n={matrix.frame.n}, masses have n={frame.n}")
    diff = m1.to_vector() - m2.to_vector()
    q = 0.5 * float(diff @ matrix.entries @ diff)
    if q < -_TOL:
        raise NegativeQuadraticForm(f"quadratic form is {q:.3g}; matrix is not positive semidefinite")
    d = math.sqrt(max(q, 0.0))
    if 1.0 < d <= 1.0 + _TOL:
        d = 1.0
    return d
