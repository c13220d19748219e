"""Mass functions on the ordered power set and the bel / pl / BetP transforms."""

from __future__ import annotations

from collections.abc import Mapping
from math import fsum
from types import MappingProxyType
from typing import Iterable

import numpy as np

from .exceptions import FrameMismatch, NegativeMass, NotNormalized, TotalConflict
from .frame import (
    EMPTY,
    OrderedElement,
    OrderedFrame,
    enumerate_ops,
    index_of,
    intersect,
    ops_size,
    subset,
)

__all__ = [
    "NORMALIZATION_TOL",
    "MassFunction",
    "bel",
    "betp",
    "categorical",
    "check_same_frame",
    "make_mass",
    "pl",
    "vacuous",
]

NORMALIZATION_TOL = 1e-9


class MassFunction(Mapping):
    """A normalized basic belief assignment over an ordered power set.

    Behaves as a read-only mapping from focal elements to their mass; looking
    up a non-focal element returns 0. Zero masses are dropped on
    construction and duplicate keys are summed, so the key set is exactly
    the focal set. Mass on the empty set is allowed.

    Set ``renormalize=True`` to rescale inputs whose total is off; otherwise
    a total further than 1e-9 from one raises :class:`NotNormalized`.
    """

    __slots__ = ("_frame", "_masses")

    def __init__(self, frame: OrderedFrame, entries=(), *, renormalize: bool = False):
        if isinstance(entries, Mapping):
            entries = entries.items()
        acc: dict[OrderedElement, list[float]] = {}
        for x, v in entries:
            frame.validate(x)
            v = float(v)
            if not v >= 0.0:
                raise NegativeMass(f"negative or NaN mass {v} on {x}")
            if v > 0.0:
                acc.setdefault(x, []).append(v)
        masses = {x: fsum(vs) for x, vs in acc.items()}
        total = fsum(masses.values())
        if renormalize:
            if total <= 0.0:
                raise NotNormalized("cannot renormalize a mass function with zero total")
            masses = {x: v / total for x, v in masses.items()}
        elif abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"masses sum to {total!r}, expected 1")
        ordered = sorted(masses, key=index_of)
        self._frame = frame
        self._masses = MappingProxyType({x: masses[x] for x in ordered})

    @classmethod
    def from_vector(cls, frame: OrderedFrame, vector, **kwargs) -> MassFunction:
        """Build from a vector indexed by the canonical enumeration."""
        vector = np.asarray(vector, dtype=float)
        if vector.shape != (ops_size(frame.n),):
            raise FrameMismatch(
                f"vector of shape {vector.shape} does not match {ops_size(frame.n)} elements"
            )
        elems = enumerate_ops(frame.n)
        return cls(frame, zip(elems, vector.tolist()), **kwargs)

    @property
    def frame(self) -> OrderedFrame:
        return self._frame

    @property
    def focal(self) -> list[OrderedElement]:
        return list(self._masses)

    def __getitem__(self, x: OrderedElement) -> float:
        return self._masses.get(x, 0.0)

    def __iter__(self):
        return iter(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __contains__(self, x) -> bool:
        return x in self._masses

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self._frame == other._frame and dict(self._masses) == dict(other._masses)

    def __hash__(self):
        return hash((self._frame, tuple(self._masses.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {v:.6g}" for x, v in self._masses.items())
        return f"MassFunction(n={self._frame.n}, {{{body}}})"

    def isclose(self, other: MassFunction, tol: float = 1e-12) -> bool:
        if self._frame != other._frame:
            return False
        return bool(np.all(np.abs(self.to_vector() - other.to_vector()) <= tol))

    def to_vector(self) -> np.ndarray:
        v = np.zeros(ops_size(self._frame.n))
        for x, m in self._masses.items():
            v[index_of(x)] = m
        return v

    def renormalized(self) -> MassFunction:
        """Copy with the empty-set mass redistributed proportionally."""
        conflict = self[EMPTY]
        if conflict >= 1.0:
            raise TotalConflict("all mass is on the empty set")
        return MassFunction(
            self._frame,
            [(x, v / (1.0 - conflict)) for x, v in self._masses.items() if not x.is_empty],
            renormalize=True,
        )

    def bel(self, x: OrderedElement) -> float:
        return bel(self, x)

    def pl(self, x: OrderedElement) -> float:
        return pl(self, x)

    def betp(self, i: int) -> float:
        return betp(self, i)

    def betp_vector(self) -> np.ndarray:
        return np.array([betp(self, i) for i in range(1, self._frame.n + 1)])


def make_mass(
    frame: OrderedFrame,
    entries: Iterable[tuple[OrderedElement, float]],
    *,
    renormalize: bool = False,
) -> MassFunction:
    return MassFunction(frame, entries, renormalize=renormalize)


def categorical(frame: OrderedFrame, x: OrderedElement) -> MassFunction:
    if x.is_empty:
        raise NotNormalized("a categorical mass needs a non-empty element; use make_mass for m(empty)=1")
    return MassFunction(frame, [(x, 1.0)])


def vacuous(frame: OrderedFrame) -> MassFunction:
    return MassFunction(frame, [(frame.omega, 1.0)])


def check_same_frame(*masses: MassFunction) -> OrderedFrame:
    frame = masses[0].frame
    for m in masses[1:]:
        if m.frame != frame:
            raise FrameMismatch(f"frames differ: {frame.labels} vs {m.frame.labels}")
    return frame


def bel(m: MassFunction, x: OrderedElement) -> float:
    m.frame.validate(x)
    return fsum(v for y, v in m.items() if not y.is_empty and subset(y, x))


def pl(m: MassFunction, x: OrderedElement) -> float:
    # not 1 - bel(complement): complements leave the ordered power set
    m.frame.validate(x)
    return fsum(v for y, v in m.items() if not intersect(y, x).is_empty)


def betp(m: MassFunction, i: int) -> float:
    if not 1 <= i <= m.frame.n:
        raise IndexError(f"ordinal {i} out of range 1..{m.frame.n}")
    conflict = m[EMPTY]
    if conflict >= 1.0:
        raise TotalConflict("pignistic probability undefined when m(empty) = 1")
    return fsum(v / len(y) for y, v in m.items() if i in y) / (1.0 - conflict)

