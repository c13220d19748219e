"""Random masses and a brute-force 2^Omega oracle independent of the interval code."""

from fractions import Fraction
from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from ordbelief import EMPTY, MassFunction, OrderedFrame, enumerate_ops


def random_mass(rng, n, *, max_focal=4, allow_empty=False):
    frame = OrderedFrame(n)
    elems = enumerate_ops(n)
    pool = elems if allow_empty else elems[1:]
    k = int(rng.integers(1, min(max_focal, len(pool)) + 1))
    picks = rng.choice(len(pool), size=k, replace=False)
    weights = rng.dirichlet(np.ones(k))
    return MassFunction(frame, [(pool[i], w) for i, w in zip(picks, weights)])


@st.composite
def masses(draw, n=None, min_n=1, max_n=5, allow_empty=False, frame_n=None):
    n = frame_n or n or draw(st.integers(min_n, max_n))
    elems = enumerate_ops(n)
    pool = elems if allow_empty else elems[1:]
    idx = draw(st.lists(st.integers(0, len(pool) - 1), min_size=1, max_size=4, unique=True))
    raw = draw(st.lists(st.floats(0.05, 1.0), min_size=len(idx), max_size=len(idx)))
    total = sum(raw)
    return MassFunction(OrderedFrame(n), [(pool[i], w / total) for i, w in zip(idx, raw)])


# --- bitset oracle -------------------------------------------------------

def members(x):
    return frozenset() if x.is_empty else frozenset(range(x.lo, x.hi + 1))


def to_sets(m):
    return {members(x): v for x, v in m.items()}


def powerset(n):
    states = range(1, n + 1)
    for r in range(n + 1):
        for c in combinations(states, r):
            yield frozenset(c)


def set_conjunctive(a, b):
    out = {}
    for x, u in a.items():
        for y, v in b.items():
            out[x & y] = out.get(x & y, 0.0) + u * v
    return out


def set_dempster(a, b):
    conj = set_conjunctive(a, b)
    k = 1.0 - conj.pop(frozenset(), 0.0)
    return {x: v / k for x, v in conj.items()}


def set_yager(a, b, n):
    conj = set_conjunctive(a, b)
    omega = frozenset(range(1, n + 1))
    conj[omega] = conj.get(omega, 0.0) + conj.pop(frozenset(), 0.0)
    return conj


def set_bel(a, x):
    return sum(v for y, v in a.items() if y and y <= x)


def set_pl(a, x):
    return sum(v for y, v in a.items() if y & x)


def set_betp(a, i):
    k = 1.0 - a.get(frozenset(), 0.0)
    return sum(v / len(y) for y, v in a.items() if i in y) / k


def sets_close(a, b, tol=1e-12):
    keys = set(a) | set(b)
    return all(abs(a.get(k, 0.0) - b.get(k, 0.0)) <= tol for k in keys)


# --- exact matrix oracle (member sets, rationals) ------------------------

def exact_ordered_entry(a, b, n):
    """Modified Jaccard on member sets with the mean pairwise ordinal gap."""
    A, B = members(a), members(b)
    if not A and not B:
        return Fraction(1)
    if not A or not B:
        return Fraction(0)
    if A & B:
        return Fraction(len(A & B), len(range(min(A | B), max(A | B) + 1)))
    gap = Fraction(sum(abs(i - j) for i in A for j in B), len(A) * len(B) * (n - 1))
    return (1 - gap) / n


def empty_mass(n):
    return MassFunction(OrderedFrame(n), [(EMPTY, 1.0)])
