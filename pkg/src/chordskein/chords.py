"""Combinatorics of chords between n punctures placed clockwise on a circle.

Vertices are 1-based and clockwise means increasing index modulo n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple


class Chord(NamedTuple):
    """The generator joining punctures ``a < b``.

    Tuple ordering, lexicographic on ``(a, b)``, is the fixed generator order
    used for sorting monomials.
    """

    a: int
    b: int

    def __str__(self):
        return f"b({self.a},{self.b})"

    def other(self, v: int) -> int:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise ValueError(f"{v} is not an endpoint of {self}")


def chord(i: int, j: int, n: int | None = None) -> Chord:
    """Canonical chord from endpoints in either order."""
    if i == j:
        raise ValueError("no single-vertex generator")
    if n is not None and not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"chord ({i},{j}) out of range for n={n}")
    return Chord(i, j) if i < j else Chord(j, i)


def all_chords(n: int) -> list[Chord]:
    return [Chord(a, b) for a, b in combinations(range(1, n + 1), 2)]


def cyclic_interval(i: int, j: int, n: int) -> list[int]:
    """Vertices strictly between i and j moving clockwise, starting at i+1."""
    out = []
    v = i % n + 1
    while v != j:
        out.append(v)
        v = v % n + 1
    return out


def is_clockwise(vertices, n: int) -> bool:
    """True iff the distinct vertices appear in clockwise cyclic order."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    start = vs.index(min(vs))
    rotated = vs[start:] + vs[:start]
    return rotated == sorted(rotated)


def crosses(c1: Chord, c2: Chord, n: int) -> bool:
    if len({c1.a, c1.b, c2.a, c2.b}) < 4:
        return False
    # endpoints interleave iff exactly one of c2's ends lies strictly inside (a, b)
    return (c1.a < c2.a < c1.b) != (c1.a < c2.b < c1.b)


@dataclass(frozen=True)
class Identical:
    pass


@dataclass(frozen=True)
class DisjointNonCrossing:
    pass


@dataclass(frozen=True)
class SharedEndpoint:
    """Word ``[c1, c2]`` with ``c1 = {shared, z}``, ``c2 = {x, shared}``.

    ``clockwise`` records whether ``(x, shared, z)`` is clockwise, which is
    exactly the orientation of the left-hand side of the q-commutation rule.
    """

    shared: int
    clockwise: bool


@dataclass(frozen=True)
class Crossing:
    labels: tuple


PairClass = Identical | DisjointNonCrossing | SharedEndpoint | Crossing


def classify_pair(c1: Chord, c2: Chord, n: int) -> PairClass:
    if c1 == c2:
        return Identical()
    common = {c1.a, c1.b} & {c2.a, c2.b}
    if common:
        (s,) = common
        z, x = c1.other(s), c2.other(s)
        return SharedEndpoint(s, is_clockwise((x, s, z), n))
    if crosses(c1, c2, n):
        return Crossing(canonical_ptolemy_labels(c1, c2, n))
    return DisjointNonCrossing()


def ptolemy_labelings(c1: Chord, c2: Chord, n: int) -> list[tuple]:
    """Both clockwise labelings ``(i, j, k, l)`` with ``{i,k} = c1`` and ``{j,l} = c2``."""
    if not crosses(c1, c2, n):
        raise ValueError(f"{c1} and {c2} do not cross")
    out = []
    for i, k in ((c1.a, c1.b), (c1.b, c1.a)):
        inside = cyclic_interval(i, k, n)
        j = c2.a if c2.a in inside else c2.b
        out.append((i, j, k, c2.other(j)))
    return out


def canonical_ptolemy_labels(c1: Chord, c2: Chord, n: int) -> tuple:
    """The labeling starting at the smaller endpoint of ``c1``."""
    return ptolemy_labelings(c1, c2, n)[0]
