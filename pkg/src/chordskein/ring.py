"""Exact arithmetic in the Laurent ring Z[q^{1/2 +-}, v_1^{+-}, ..., v_n^{+-}].

Elements are sparse maps from exponent keys to nonzero Python integers.  A
key is ``(qh, v)`` where ``qh`` counts powers of ``q^{1/2}`` and ``v`` is a
tuple of length ``n`` holding the exponent of each puncture variable.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class DimensionError(ValueError):
    """Raised when elements over different puncture counts are combined."""


Key = tuple  # (qh: int, v: tuple[int, ...])


def _add_keys(k1: Key, k2: Key) -> Key:
    return (k1[0] + k2[0], tuple(a + b for a, b in zip(k1[1], k2[1])))


class RingElem:
    """Immutable element of the coefficient ring over ``n`` punctures."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, int] | Iterable = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        clean = {}
        for (qh, v), c in terms:
            v = tuple(v)
            if len(v) != n:
                raise DimensionError(f"exponent vector {v} has length != {n}")
            key = (int(qh), v)
            clean[key] = clean.get(key, 0) + int(c)
        self.n = n
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "RingElem":
        # terms must already be canonical (no zeros, correct key shape)
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, n: int) -> "RingElem":
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, c: int) -> "RingElem":
        return cls._raw(n, {(0, (0,) * n): c} if c else {})

    @classmethod
    def one(cls, n: int) -> "RingElem":
        return cls.const(n, 1)

    @classmethod
    def monomial(cls, n: int, c: int = 1, qh: int = 0, v: dict | None = None) -> "RingElem":
        """``c * q^{qh/2} * prod v_i^{e_i}`` with ``v`` mapping 1-based i to e_i."""
        vexp = [0] * n
        for i, e in (v or {}).items():
            if not 1 <= i <= n:
                raise IndexError(f"puncture index {i} out of range 1..{n}")
            vexp[i - 1] += e
        return cls._raw(n, {(qh, tuple(vexp)): c} if c else {})

    @classmethod
    def qhalf(cls, n: int, a: int = 1) -> "RingElem":
        """``q^{a/2}``."""
        return cls.monomial(n, 1, a)

    @classmethod
    def vgen(cls, n: int, i: int, e: int = 1) -> "RingElem":
        return cls.monomial(n, 1, 0, {i: e})

    @classmethod
    def laurent_q(cls, n: int, coeffs: Mapping[int, int]) -> "RingElem":
        """Element of Z[q^{+-1/2}] given as ``{qh: coefficient}``."""
        zero = (0,) * n
        return cls(n, {(qh, zero): c for qh, c in coeffs.items()})

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly +-monomials."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # arithmetic

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.n != self.n:
                raise DimensionError(f"puncture counts differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return RingElem.const(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RingElem._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElem._raw(self.n, {k: -c for k, c in self._terms.items()})

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
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _add_keys(k1, k2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return RingElem._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("only units may be raised to negative powers")
            (qh, v), c = next(iter(self._terms.items()))
            return RingElem._raw(self.n, {(-qh * -e, tuple(-x * -e for x in v)): c ** (-e)})
        result = RingElem.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divide_by_monomial(self, m: "RingElem") -> "RingElem":
        """Exact division by a single term whose coefficient divides every coefficient."""
        m = self._coerce(m)
        if not m.is_monomial():
            raise ValueError("divisor must be a single term")
        (mqh, mv), mc = next(iter(m._terms.items()))
        out = {}
        for (qh, v), c in self._terms.items():
            quot, rem = divmod(c, mc)
            if rem:
                raise ValueError(f"coefficient {c} not divisible by {mc}")
            out[(qh - mqh, tuple(a - b for a, b in zip(v, mv)))] = quot
        return RingElem._raw(self.n, out)

    def invert_q(self) -> "RingElem":
        """Substitute q^{1/2} -> q^{-1/2}; puncture variables are fixed."""
        return RingElem._raw(self.n, {(-qh, v): c for (qh, v), c in self._terms.items()})

    def specialize_q1(self) -> "RingElem":
        out: dict = {}
        for (qh, v), c in self._terms.items():
            k = (0, v)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RingElem._raw(self.n, out)

    def q_free(self) -> bool:
        return all(qh == 0 for qh, _ in self._terms)

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElem.const(self.n, other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # serialization

    def to_json(self) -> list:
        return [{"qh": qh, "v": list(v), "c": c} for (qh, v), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, n: int, data: list) -> "RingElem":
        return cls(n, [((t["qh"], tuple(t["v"])), t["c"]) for t in data])

    def __repr__(self):
        return f"RingElem({self.n}, {self.sorted_terms()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (qh, v), c in sorted(self._terms.items(), reverse=True):
            factors = []
            if qh:
                factors.append("Q" if qh == 1 else f"Q^{qh}")
            for i, e in enumerate(v, start=1):
                if e:
                    factors.append(f"v({i})" if e == 1 else f"v({i})^{e}")
            parts.append((c, factors))
        return join_signed_terms(parts)


def join_signed_terms(parts: list) -> str:
    """Render ``[(int_coeff, [factor strings])]`` as ``a*x + b*y - ...``."""
    out = []
    for idx, (c, factors) in enumerate(parts):
        mag = abs(c)
        if factors:
            body = "*".join(factors if mag == 1 else [str(mag)] + factors)
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _check_n(a: RingElem, b: RingElem) -> None:
    if a.n != b.n:
        raise DimensionError(f"puncture counts differ: {a.n} vs {b.n}")


def ring_add(a: RingElem, b: RingElem) -> RingElem:
    _check_n(a, b)
    return a + b


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    _check_n(a, b)
    return a * b


def specialize_q1(a: RingElem) -> RingElem:
    return a.specialize_q1()


def _divide_qhalf_minus_one(a: RingElem) -> RingElem:
    # a(1) == 0 is assumed; divide each v-group, viewed as a Laurent
    # polynomial in Q = q^{1/2}, by (Q - 1) via synthetic division.
    groups: dict = {}
    for (qh, v), c in a.items():
        groups.setdefault(v, {})[qh] = c
    out = {}
    for v, poly in groups.items():
        lo, hi = min(poly), max(poly)
        # descending synthetic division: quotient degrees hi-1 .. lo
        carry = 0
        for d in range(hi, lo, -1):
            carry += poly.get(d, 0)
            if carry:
                out[(d - 1, v)] = carry
        if carry + poly.get(lo, 0) != 0:
            raise ArithmeticError("element is not divisible by q^{1/2} - 1")
    return RingElem._raw(a.n, out)


def factor_qhalf_minus_one(a: RingElem) -> tuple[int, RingElem]:
    """Return ``(k, r)`` with ``a == (q^{1/2} - 1)^k * r`` and ``r`` nonzero at q = 1."""
    if a.is_zero():
        raise ValueError("cannot factor the zero element")
    k = 0
    while a.specialize_q1().is_zero():
        a = _divide_qhalf_minus_one(a)
        k += 1
    return k, a
