"""Combination rules that keep their output inside the ordered power set.

Conjunctive rules are closed on intervals because the intersection of two
intervals is an interval. Disjunctive pooling is not closed under the plain
set union (``w1 | w3`` skips ``w2``), so every disjunctive step here uses
the ordered union, the covering interval.

All rules enumerate the product of focal sets; with at most n(n+1)/2 focal
elements per source that is cheap for questionnaire-sized frames.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from functools import reduce
from typing import Callable, Sequence

from .exceptions import BeliefError, InvalidDelta, InvalidParameter, TotalConflict
from .frame import EMPTY, OrderedElement, intersect, ordered_union
from .fuzzy import FuzzyParams, fuzzy_intersection_cardinality
from .mass import MassFunction, check_same_frame

__all__ = [
    "RULES",
    "average",
    "combine",
    "conjunctive",
    "constant_delta",
    "dempster",
    "jaccard_delta",
    "mixed",
    "ordered_disjunctive",
    "ordered_dubois_prade",
    "ordered_dubois_prade_pairwise",
    "yager",
]

DeltaPolicy = Callable[[OrderedElement, OrderedElement, int], float]


def _tuples(masses: Sequence[MassFunction]):
    """Yield ``(focal tuple, product of masses)`` over all focal combinations."""
    for combo in itertools.product(*(m.items() for m in masses)):
        elems = tuple(x for x, _ in combo)
        yield elems, math.prod(v for _, v in combo)


def _collect(frame, acc) -> MassFunction:
    return MassFunction(frame, [(x, math.fsum(vs)) for x, vs in acc.items()])


def _require(masses, minimum: int):
    if len(masses) < minimum:
        raise BeliefError(f"need at least {minimum} mass functions, got {len(masses)}")
    return check_same_frame(*masses)


def _conjunctive_acc(masses):
    acc = defaultdict(list)
    for elems, w in _tuples(masses):
        acc[reduce(intersect, elems)].append(w)
    return acc


def conjunctive(m1: MassFunction, m2: MassFunction, *more: MassFunction) -> MassFunction:
    """Unnormalized conjunctive rule; conflict stays on the empty set."""
    masses = (m1, m2, *more)
    frame = _require(masses, 2)
    return _collect(frame, _conjunctive_acc(masses))


def dempster(m1: MassFunction, m2: MassFunction, *more: MassFunction) -> MassFunction:
    masses = (m1, m2, *more)
    frame = _require(masses, 2)
    acc = _conjunctive_acc(masses)
    conflict = math.fsum(acc.pop(EMPTY, []))
    if conflict >= 1.0 - 1e-12 or not acc:
        raise TotalConflict("sources are in total conflict; Dempster's rule is undefined")
    k = 1.0 - conflict
    return MassFunction(frame, [(x, math.fsum(vs) / k) for x, vs in acc.items()])


def yager(m1: MassFunction, m2: MassFunction, *more: MassFunction) -> MassFunction:
    """Conjunctive rule with the conflicting mass moved to the whole frame."""
    masses = (m1, m2, *more)
    frame = _require(masses, 2)
    acc = _conjunctive_acc(masses)
    acc[frame.omega].extend(acc.pop(EMPTY, []))
    return _collect(frame, acc)


def ordered_disjunctive(masses: Sequence[MassFunction]) -> MassFunction:
    masses = list(masses)
    frame = _require(masses, 2)
    acc = defaultdict(list)
    for elems, w in _tuples(masses):
        acc[reduce(ordered_union, elems)].append(w)
    return _collect(frame, acc)


def ordered_dubois_prade(masses: Sequence[MassFunction]) -> MassFunction:
    """Dubois-Prade rule evaluated jointly over all sources.

    A tuple of focal elements with a non-empty intersection keeps it; a
    conflicting tuple sends its mass to the ordered union of the tuple.
    The rule is not associative, so this differs in general from
    :func:`ordered_dubois_prade_pairwise`.
    """
    masses = list(masses)
    frame = _require(masses, 2)
    acc = defaultdict(list)
    for elems, w in _tuples(masses):
        target = reduce(intersect, elems)
        if target.is_empty:
            # only all-empty tuples stay on the empty set
            target = reduce(ordered_union, elems)
        acc[target].append(w)
    return _collect(frame, acc)


def ordered_dubois_prade_pairwise(masses: Sequence[MassFunction]) -> MassFunction:
    """Left fold of the two-source Dubois-Prade rule."""
    masses = list(masses)
    _require(masses, 2)
    return reduce(lambda a, b: ordered_dubois_prade([a, b]), masses)


def average(masses: Sequence[MassFunction]) -> MassFunction:
    masses = list(masses)
    frame = _require(masses, 1)
    s = len(masses)
    acc = defaultdict(list)
    for m in masses:
        for x, v in m.items():
            acc[x].append(v / s)
    return _collect(frame, acc)


def jaccard_delta(params: FuzzyParams | None = None) -> DeltaPolicy:
    """Conjunctive share ``|Y1 & Y2|_o / |Y1 | Y2|``.

    Without ``params`` (or with ``alpha == 0``) this is the crisp Jaccard
    index and disjoint pairs go entirely to their ordered union. Pairs
    involving the empty set get share 0.
    """

    def delta(y1: OrderedElement, y2: OrderedElement, n: int) -> float:
        if y1.is_empty or y2.is_empty:
            return 0.0
        union = len(ordered_union(y1, y2))
        if params is None or params.alpha == 0.0:
            return len(intersect(y1, y2)) / union
        return fuzzy_intersection_cardinality(y1, y2, n, params) / union

    return delta


def constant_delta(value: float) -> DeltaPolicy:
    def delta(y1, y2, n):
        return value

    return delta


def mixed(m1: MassFunction, m2: MassFunction, delta: DeltaPolicy | None = None) -> MassFunction:
    """Per-pair split between the intersection and the ordered union.

    Each product ``m1(Y1) m2(Y2)`` sends a share ``delta(Y1, Y2)`` to
    ``Y1 & Y2`` and the rest to the ordered union. Defaults to the crisp
    Jaccard share.
    """
    frame = _require((m1, m2), 2)
    delta = jaccard_delta() if delta is None else delta
    acc = defaultdict(list)
    for (y1, y2), w in _tuples((m1, m2)):
        d2 = float(delta(y1, y2, frame.n))
        if not 0.0 <= d2 <= 1.0:
            raise InvalidDelta(f"delta({y1}, {y2}) = {d2} is outside [0, 1]")
        if d2 > 0.0:
            acc[intersect(y1, y2)].append(d2 * w)
        if d2 < 1.0:
            acc[ordered_union(y1, y2)].append((1.0 - d2) * w)
    return _collect(frame, acc)


RULES = ("conj", "dempster", "yager", "odisj", "odp", "avg", "mixed")


def combine(masses: Sequence[MassFunction], rule: str, fuzzy: FuzzyParams | None = None) -> MassFunction:
    """Apply a rule by its short name (see ``RULES``).

    ``fuzzy`` only matters for ``mixed``, where it selects the fuzzy
    Jaccard share. A single source is returned unchanged.
    """
    masses = list(masses)
    if rule not in RULES:
        raise InvalidParameter(f"unknown rule {rule!r}; choose from {', '.join(RULES)}")
    if len(masses) == 1:
        check_same_frame(*masses)
        return masses[0]
    if rule == "conj":
        return conjunctive(*masses)
    if rule == "dempster":
        return dempster(*masses)
    if rule == "yager":
        return yager(*masses)
    if rule == "odisj":
        return ordered_disjunctive(masses)
    if rule == "odp":
        return ordered_dubois_prade(masses)
    if rule == "avg":
        return average(masses)
    if len(masses) != 2:
        raise BeliefError(f"the mixed rule takes exactly two sources, got {len(masses)}")
    return mixed(masses[0], masses[1], jaccard_delta(fuzzy))
