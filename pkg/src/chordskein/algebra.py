"""The free algebra over the coefficient ring generated by chords.

A word is a tuple of :class:`~chordskein.chords.Chord`; the empty tuple is the
identity.  Multiplication here is plain concatenation; reduction modulo the
chord relations lives in :mod:`chordskein.rewrite`.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .chords import Chord, chord
from .ring import DimensionError, RingElem

Word = tuple


def word_key(word: Word) -> tuple:
    """Canonical word order: by length, then lexicographic."""
    return (len(word), word)


class AlgebraElem:
    """Immutable finite combination of words with ring coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Word, RingElem] | Iterable = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        out: dict = {}
        for w, c in terms:
            w = tuple(Chord(*x) for x in w)
            if isinstance(c, int):
                c = RingElem.const(n, c)
            if c.n != n:
                raise DimensionError(f"coefficient over {c.n} punctures in algebra over {n}")
            s = out.get(w)
            out[w] = c if s is None else s + c
        self.n = n
        self._terms = {w: c for w, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "AlgebraElem":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "AlgebraElem":
        return cls._raw(n, {})

    @classmethod
    def scalar(cls, c: RingElem) -> "AlgebraElem":
        return cls._raw(c.n, {(): c} if c else {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElem":
        return cls.scalar(RingElem.one(n))

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "AlgebraElem":
        return cls._raw(n, {(chord(i, j, n),): RingElem.one(n)})

    @classmethod
    def word(cls, n: int, word: Sequence, coeff: RingElem | int = 1) -> "AlgebraElem":
        w = tuple(x if isinstance(x, Chord) else chord(*x, n) for x in word)
        return cls(n, {w: coeff})

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, word: Word) -> RingElem:
        return self._terms.get(tuple(word), RingElem.zero(self.n))

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    # arithmetic

    def _coerce(self, other) -> "AlgebraElem":
        if isinstance(other, AlgebraElem):
            if other.n != self.n:
                raise DimensionError(f"puncture counts differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return AlgebraElem.scalar(RingElem.const(self.n, other))
        if isinstance(other, RingElem):
            if other.n != self.n:
                raise DimensionError(f"puncture counts differ: {self.n} vs {other.n}")
            return AlgebraElem.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return AlgebraElem._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElem._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return AlgebraElem._raw(self.n, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = AlgebraElem.one(self.n)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, c: RingElem) -> "AlgebraElem":
        if not c:
            return AlgebraElem.zero(self.n)
        return AlgebraElem._raw(self.n, {w: x * c for w, x in self._terms.items() if x * c})

    def map_coefficients(self, f) -> "AlgebraElem":
        return AlgebraElem(self.n, [(w, f(c)) for w, c in self._terms.items()])

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, RingElem)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # serialization

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"word": [[c.a, c.b] for c in w], "coeff": coeff.to_json()}
                for w, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElem":
        n = data["n"]
        return cls(n, [
            (tuple(chord(a, b, n) for a, b in t["word"]), RingElem.from_json(n, t["coeff"]))
            for t in data["terms"]
        ])

    def __repr__(self):
        return f"AlgebraElem({self.n}, {self.sorted_terms()!r})"

    def __str__(self):
        from .expr import format_element
        return format_element(self)


def alg_mul(a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
    if a.n != b.n:
        raise DimensionError(f"puncture counts differ: {a.n} vs {b.n}")
    return a * b


def alg_linear_combine(coeffs: Sequence[RingElem], elems: Sequence[AlgebraElem],
                       n: int | None = None) -> AlgebraElem:
    if len(coeffs) != len(elems):
        raise ValueError(f"{len(coeffs)} coefficients for {len(elems)} elements")
    if not elems:
        return AlgebraElem.zero(n if n is not None else 0)
    total = AlgebraElem.zero(elems[0].n)
    for c, x in zip(coeffs, elems):
        total = total + x.scale(c)
    return total


def bar(a: AlgebraElem) -> AlgebraElem:
    """Anti-automorphism: reverse every word and send q^{1/2} to q^{-1/2}."""
    return AlgebraElem._raw(a.n, {w[::-1]: c.invert_q() for w, c in a.items()})
