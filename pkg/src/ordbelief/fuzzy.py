"""Fuzzy membership of states in ordered elements.

States stay exclusive; only the cardinality of an intersection is softened.
A state outside ``X`` belongs to it with degree ``alpha * exp(-gamma * d)``
where ``d`` is its ordinal distance to ``X``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import FrameMismatch, InvalidParameter
from .frame import OrderedElement, ordered_union
from .metric import ElementDistanceMode, _check_nonempty, d_elem

__all__ = ["FuzzyParams", "fuzzy_intersection_cardinality", "membership"]


@dataclass(frozen=True)
class FuzzyParams:
    """Shape of the membership function.

    Both ``alpha`` and ``gamma`` live in [0, 1]. Pass ``allow_large_gamma=True``
    to experiment with steeper decay; such params report ``conformant=False``.
    """

    alpha: float = 0.5
    gamma: float = 1.0
    mode: ElementDistanceMode = ElementDistanceMode.AVERAGE
    allow_large_gamma: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "mode", ElementDistanceMode.coerce(self.mode))
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidParameter(f"alpha must be in [0, 1], got {self.alpha}")
        if not self.gamma >= 0.0:
            raise InvalidParameter(f"gamma must be non-negative, got {self.gamma}")
        if self.gamma > 1.0 and not self.allow_large_gamma:
            raise InvalidParameter(f"gamma must be in [0, 1], got {self.gamma}")

    @property
    def conformant(self) -> bool:
        return self.gamma <= 1.0


def membership(i: int, x: OrderedElement, n: int, params: FuzzyParams) -> float:
    _check_nonempty(x)
    if i in x:
        return 1.0
    return params.alpha * math.exp(-params.gamma * d_elem(i, x, n, params.mode))


def fuzzy_intersection_cardinality(
    x: OrderedElement, y: OrderedElement, n: int, params: FuzzyParams
) -> float:
    """Sum of ``min(mu_x, mu_y)`` over the states of ``x`` ordered-union ``y``.

    States outside the covering interval do not contribute, which keeps
    ``|x & x|_o == |x|``.
    """
    _check_nonempty(x, y)
    if max(x.hi, y.hi) > n:
        raise FrameMismatch(f"elements do not fit a frame of {n} states")
    return math.fsum(
        min(membership(w, x, n, params), membership(w, y, n, params)) for w in ordered_union(x, y)
    )
