"""Decisions on combined mass functions and the distance-based conflict measure."""

from __future__ import annotations

import enum
import itertools
import math
from typing import Callable, Sequence

from .exceptions import BeliefError, EmptyCandidates, InvalidElement, InvalidParameter, TotalConflict
from .frame import EMPTY, OrderedElement, index_of, singleton, subset
from .mass import MassFunction, bel, betp, categorical, check_same_frame, pl
from .metric import DissimilarityMatrix, belief_distance

__all__ = [
    "Criterion",
    "conflict",
    "conflict_multi",
    "decide_distance",
    "decide_pointwise",
    "distance_scores",
    "inclusion_degree",
    "pointwise_scores",
]


class Criterion(str, enum.Enum):
    BEL = "bel"
    PL = "pl"
    BETP = "betp"

    @classmethod
    def coerce(cls, value) -> Criterion:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter(f"unknown criterion {value!r}; use bel, pl or betp") from None


def pointwise_scores(m: MassFunction, criterion) -> list[float]:
    """Score of each singleton ``w_1 .. w_n`` under ``criterion``."""
    criterion = Criterion.coerce(criterion)
    if m[EMPTY] >= 1.0:
        raise TotalConflict("cannot decide on a mass function with m(empty) = 1")
    n = m.frame.n
    if criterion is Criterion.BETP:
        return [betp(m, i) for i in range(1, n + 1)]
    fn = bel if criterion is Criterion.BEL else pl
    return [fn(m, singleton(i)) for i in range(1, n + 1)]


def decide_pointwise(m: MassFunction, criterion=Criterion.BETP) -> int:
    """Ordinal maximizing the criterion; ties go to the smallest ordinal."""
    scores = pointwise_scores(m, criterion)
    return 1 + max(range(len(scores)), key=lambda k: (scores[k], -k))


def _check_candidates(m: MassFunction, candidates: Sequence[OrderedElement]):
    candidates = list(candidates)
    if not candidates:
        raise EmptyCandidates("no candidate elements to decide on")
    for x in candidates:
        m.frame.validate(x)
        if x.is_empty:
            raise InvalidElement("the empty set cannot be a decision candidate")
    return candidates


def distance_scores(
    m: MassFunction, candidates: Sequence[OrderedElement], matrix: DissimilarityMatrix
) -> list[float]:
    """Distance from ``m`` to the categorical mass of each candidate."""
    candidates = _check_candidates(m, candidates)
    return [belief_distance(m, categorical(m.frame, x), matrix) for x in candidates]


def decide_distance(
    m: MassFunction, candidates: Sequence[OrderedElement], matrix: DissimilarityMatrix
) -> OrderedElement:
    """Candidate whose categorical mass is nearest to ``m``.

    Ties go to the candidate that comes first in the canonical enumeration.
    """
    candidates = _check_candidates(m, candidates)
    scores = distance_scores(m, candidates, matrix)
    best = min(range(len(candidates)), key=lambda k: (scores[k], index_of(candidates[k])))
    return candidates[best]


def _directed_inclusion(fa: list[OrderedElement], fb: list[OrderedElement]) -> float:
    if not fa or not fb:
        return 0.0
    hits = sum(1 for x, y in itertools.product(fa, fb) if subset(x, y))
    return hits / (len(fa) * len(fb))


def inclusion_degree(m1: MassFunction, m2: MassFunction) -> float:
    """Symmetric degree to which the focal elements of one source nest in the other.

    Fraction of focal pairs ``(X, Y)`` with ``X <= Y``, taken in the more
    favourable direction. Empty focal elements are ignored.
    """
    check_same_frame(m1, m2)
    f1 = [x for x in m1 if not x.is_empty]
    f2 = [x for x in m2 if not x.is_empty]
    return max(_directed_inclusion(f1, f2), _directed_inclusion(f2, f1))


InclusionDegree = Callable[[MassFunction, MassFunction], float]


def conflict(
    m1: MassFunction,
    m2: MassFunction,
    matrix: DissimilarityMatrix,
    inclusion: InclusionDegree = inclusion_degree,
) -> float:
    """Distance between the sources, discounted by how much they include each other."""
    return (1.0 - inclusion(m1, m2)) * belief_distance(m1, m2, matrix)


def conflict_multi(
    masses: Sequence[MassFunction],
    matrix: DissimilarityMatrix,
    inclusion: InclusionDegree = inclusion_degree,
) -> float:
    """Mean pairwise conflict over all unordered pairs of sources."""
    masses = list(masses)
    if len(masses) < 2:
        raise BeliefError("conflict needs at least two mass functions")
    check_same_frame(*masses)
    values = [conflict(a, b, matrix, inclusion) for a, b in itertools.combinations(masses, 2)]
    return math.fsum(values) / len(values)
