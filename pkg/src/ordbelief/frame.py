"""Ordered frames and the interval algebra of their ordered power set.

An element of the ordered power set is either the empty set or a run of
consecutive states ``{w_lo, ..., w_hi}``. Elements are stored by their two
endpoints, so intersection, ordered union and inclusion are all O(1).

Ordinals are 1-based throughout. The canonical enumeration puts the empty
set first and then sorts intervals by ``hi`` ascending and ``lo``
descending; for three states this gives::

    empty, w1, w2, w1..w2, w3, w2..w3, w1..w3

The position of an interval in that list does not depend on the frame size,
which is what lets :func:`index_of` be a closed form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import isqrt
from typing import Iterable, Sequence

from .exceptions import InvalidElement, ParseError, UnknownElement

__all__ = [
    "EMPTY",
    "OrderedElement",
    "OrderedFrame",
    "cardinality",
    "contains",
    "element_at",
    "enumerate_ops",
    "format_element",
    "index_of",
    "intersect",
    "interval",
    "ops_size",
    "ordered_union",
    "ordered_union_n",
    "parse_element",
    "singleton",
    "subset",
]


@dataclass(frozen=True, order=False)
class OrderedElement:
    """Empty set (``lo == hi == 0``) or the interval ``{w_lo, ..., w_hi}``."""

    lo: int = 0
    hi: int = 0

    def __post_init__(self):
        if self.lo == 0 and self.hi == 0:
            return
        if not (1 <= self.lo <= self.hi):
            raise InvalidElement(f"invalid interval endpoints ({self.lo}, {self.hi})")

    @property
    def is_empty(self) -> bool:
        return self.lo == 0

    def __len__(self) -> int:
        return 0 if self.is_empty else self.hi - self.lo + 1

    def __iter__(self):
        """Iterate over the member ordinals."""
        if self.is_empty:
            return iter(())
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, i) -> bool:
        return not self.is_empty and self.lo <= i <= self.hi

    def __and__(self, other: OrderedElement) -> OrderedElement:
        return intersect(self, other)

    def __or__(self, other: OrderedElement) -> OrderedElement:
        return ordered_union(self, other)

    def __le__(self, other: OrderedElement) -> bool:
        return subset(self, other)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"OrderedElement({format_element(self)})"


EMPTY = OrderedElement()


def interval(lo: int, hi: int) -> OrderedElement:
    return OrderedElement(lo, hi)


def singleton(i: int) -> OrderedElement:
    return OrderedElement(i, i)


@dataclass(frozen=True)
class OrderedFrame:
    """A frame of ``n`` ordered, exclusive and exhaustive states.

    Labels are for display only; the ordinal of a state is its position in
    ``labels`` (1-based).
    """

    labels: tuple

    def __init__(self, labels: Iterable[str] | int):
        if isinstance(labels, int):
            if labels < 1:
                raise InvalidElement("a frame needs at least one state")
            labels = tuple(f"w{i}" for i in range(1, labels + 1))
        else:
            labels = tuple(str(lab) for lab in labels)
        if not labels:
            raise InvalidElement("a frame needs at least one state")
        if any(not lab for lab in labels):
            raise InvalidElement("frame labels must be non-empty")
        if len(set(labels)) != len(labels):
            raise InvalidElement("frame labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def omega(self) -> OrderedElement:
        """The whole frame as an element."""
        return OrderedElement(1, self.n)

    def __len__(self) -> int:
        return self.n

    def validate(self, x: OrderedElement) -> OrderedElement:
        if not isinstance(x, OrderedElement):
            raise InvalidElement(f"not an ordered element: {x!r}")
        if x.hi > self.n:
            raise UnknownElement(f"element {x} does not fit a frame of {self.n} states")
        return x

    def elements(self) -> list[OrderedElement]:
        return enumerate_ops(self.n)

    def singletons(self) -> list[OrderedElement]:
        return [singleton(i) for i in range(1, self.n + 1)]

    def parse(self, text: str) -> OrderedElement:
        return self.validate(parse_element(text))


def _as_n(frame) -> int:
    return frame.n if isinstance(frame, OrderedFrame) else int(frame)


def ops_size(n: int) -> int:
    """Number of elements of the ordered power set on ``n`` states."""
    if n < 1:
        raise InvalidElement("the ordered power set needs n >= 1")
    return 1 + n * (n + 1) // 2


def enumerate_ops(frame: OrderedFrame | int) -> list[OrderedElement]:
    n = _as_n(frame)
    ops_size(n)
    out = [EMPTY]
    for hi in range(1, n + 1):
        for lo in range(hi, 0, -1):
            out.append(OrderedElement(lo, hi))
    return out


def index_of(x: OrderedElement) -> int:
    """Position of ``x`` in the canonical enumeration."""
    if x.is_empty:
        return 0
    return 1 + x.hi * (x.hi - 1) // 2 + (x.hi - x.lo)


def element_at(k: int, frame: OrderedFrame | int) -> OrderedElement:
    n = _as_n(frame)
    if not 0 <= k < ops_size(n):
        raise IndexError(f"index {k} out of range for n={n}")
    if k == 0:
        return EMPTY
    # largest hi with 1 + hi*(hi-1)/2 <= k
    hi = (1 + isqrt(8 * (k - 1) + 1)) // 2
    return OrderedElement(hi - (k - 1 - hi * (hi - 1) // 2), hi)


def intersect(a: OrderedElement, b: OrderedElement) -> OrderedElement:
    if a.is_empty or b.is_empty:
        return EMPTY
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        return EMPTY
    return OrderedElement(lo, hi)


def ordered_union(a: OrderedElement, b: OrderedElement) -> OrderedElement:
    """Smallest interval covering both arguments; the empty set is neutral."""
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    return OrderedElement(min(a.lo, b.lo), max(a.hi, b.hi))


def ordered_union_n(elems: Sequence[OrderedElement]) -> OrderedElement:
    if not elems:
        raise InvalidElement("ordered union of an empty list")
    return reduce(ordered_union, elems)


def subset(a: OrderedElement, b: OrderedElement) -> bool:
    if a.is_empty:
        return True
    if b.is_empty:
        return False
    return b.lo <= a.lo and a.hi <= b.hi


def cardinality(a: OrderedElement) -> int:
    return len(a)


def contains(a: OrderedElement, i: int) -> bool:
    return i in a


def format_element(x: OrderedElement) -> str:
    if x.is_empty:
        return "empty"
    if x.lo == x.hi:
        return f"w{x.lo}"
    return f"w{x.lo}..w{x.hi}"


_ELEMENT_RE = re.compile(r"^w([1-9][0-9]*)(?:\.\.w([1-9][0-9]*))?$")


def parse_element(text: str) -> OrderedElement:
    """Inverse of :func:`format_element`: ``"empty"``, ``"w2"`` or ``"w1..w3"``."""
    s = text.strip()
    if s == "empty":
        return EMPTY
    match = _ELEMENT_RE.match(s)
    if match is None:
        raise ParseError(f"cannot parse element {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) else lo
    if lo > hi:
        raise ParseError(f"interval {text!r} has lo > hi")
    return OrderedElement(lo, hi)
