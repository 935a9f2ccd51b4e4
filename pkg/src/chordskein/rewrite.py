"""Reduction of chord polynomials to the sorted non-crossing monomial basis.

Three local rules are used:

* Ptolemy: ``b_ik b_jl = q b_il b_jk + q^-1 b_ij b_kl`` for ``(i, j, k, l)``
  clockwise;
* disjoint commutation: ``b_ij b_kl = b_kl b_ij`` for non-crossing chords with
  no common endpoint;
* q-commutation at a shared endpoint ``j`` of a clockwise triple ``(i, j, k)``:
  ``b_jk b_ij = q b_ij b_jk + (Q^-1 - Q^3) v_j^-1 b_ik`` and its solved form
  ``b_ij b_jk = q^-1 b_jk b_ij + (Q - Q^-3) v_j^-1 b_ik``,

where ``Q = q^{1/2}``.  The crossing weights must be ``q^{+-1}``: resolving the
overlap ``b14 b13 b12`` both ways forces ``P - 1/P = q - 1/q`` for the Ptolemy
weight ``P``, so ``Q^{+-1}`` weights would make the rules non-confluent.

Every rewrite step strictly lowers the word measure (degree, number of
crossing letter pairs, number of inversions) lexicographically.  Crossing
letters need not be adjacent in a sorted word (e.g. ``b13 b14 b24``); such a
pair is brought together by commuting the right letter leftwards past letters
it does not cross, and the Ptolemy rule is applied in the same step.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .algebra import AlgebraElem
from .chords import (
    Chord, Crossing, SharedEndpoint, all_chords, chord, classify_pair,
    crosses, ptolemy_labelings,
)
from .ring import DimensionError, RingElem


@lru_cache(maxsize=None)
def _constants(n: int):
    Q = RingElem.qhalf
    return {
        "one": RingElem.one(n),
        "Q": Q(n, 1),
        "Qinv": Q(n, -1),
        "q": Q(n, 2),
        "qinv": Q(n, -2),
        "fwd": Q(n, -1) - Q(n, 3),   # q^{-1/2} - q^{3/2}
        "rev": Q(n, 1) - Q(n, -3),   # q^{1/2} - q^{-3/2}
    }


def ptolemy_terms(labels: tuple, n: int) -> list:
    """Right-hand side of the Ptolemy rule for clockwise ``(i, j, k, l)``."""
    i, j, k, l = labels
    K = _constants(n)
    return [
        (K["q"], (chord(i, l), chord(j, k))),
        (K["qinv"], (chord(i, j), chord(k, l))),
    ]


def swap_terms(w1: Chord, w2: Chord, n: int) -> list:
    """Rewrite ``w1 w2`` over ``w2 w1`` plus lower-degree terms.

    Valid for any two distinct non-crossing chords, in either order.
    """
    cls = classify_pair(w1, w2, n)
    K = _constants(n)
    if isinstance(cls, SharedEndpoint):
        s = cls.shared
        z, x = w1.other(s), w2.other(s)
        vinv = RingElem.vgen(n, s, -1)
        if cls.clockwise:
            return [(K["q"], (w2, w1)), (K["fwd"] * vinv, (chord(x, z),))]
        return [(K["qinv"], (w2, w1)), (K["rev"] * vinv, (chord(x, z),))]
    if isinstance(cls, Crossing) or w1 == w2:
        raise ValueError(f"no commutation rule for {w1}, {w2}")
    return [(K["one"], (w2, w1))]


def reduce_pair(w1: Chord, w2: Chord, n: int) -> AlgebraElem:
    """One application of the defining relations to the two-letter word ``[w1, w2]``."""
    if crosses(w1, w2, n):
        terms = ptolemy_terms(ptolemy_labelings(w1, w2, n)[0], n)
    elif w1 > w2:
        terms = swap_terms(w1, w2, n)
    else:
        raise ValueError(f"[{w1}, {w2}] is already reduced")
    return AlgebraElem(n, [(w, c) for c, w in terms])


def crossing_count(word: tuple, n: int) -> int:
    return sum(1 for x, y in combinations(word, 2) if crosses(x, y, n))


def inversion_count(word: tuple) -> int:
    return sum(1 for x, y in combinations(word, 2) if x > y)


def word_measure(word: tuple, n: int) -> tuple:
    return (len(word), crossing_count(word, n), inversion_count(word))


def is_basis_word(word: tuple, n: int) -> bool:
    if any(word[p] > word[p + 1] for p in range(len(word) - 1)):
        return False
    return crossing_count(word, n) == 0


def _splice(word: tuple, start: int, stop: int, terms: list) -> list:
    pre, post = word[:start], word[stop:]
    return [(c, pre + w + post) for c, w in terms]


def _transport_and_resolve(word: tuple, p: int, r: int, n: int, labeling: int = 0) -> list:
    """Move letter ``r`` next to letter ``p`` then apply the Ptolemy rule.

    Letters strictly between ``p`` and ``r`` must not cross letter ``r``.
    """
    out = []
    coeff = _constants(n)["one"]
    w = list(word)
    for s in range(r - 1, p, -1):
        (c_main, swapped), *lower = swap_terms(w[s], w[s + 1], n)
        for c, piece in lower:
            out.append((coeff * c, tuple(w[:s]) + piece + tuple(w[s + 2:])))
        coeff = coeff * c_main
        w[s], w[s + 1] = swapped
    labels = ptolemy_labelings(w[p], w[p + 1], n)[labeling]
    for c, piece in ptolemy_terms(labels, n):
        out.append((coeff * c, tuple(w[:p]) + piece + tuple(w[p + 2:])))
    return out


def rewrite_step(word: tuple, n: int) -> list | None:
    """Deterministic single rewrite of ``word``; ``None`` if it is a basis word.

    Crossings are resolved first, choosing the crossing letter pair of least
    distance (leftmost among ties); otherwise the leftmost adjacent descent is
    commuted.
    """
    best = None
    for p in range(len(word)):
        for r in range(p + 1, len(word)):
            if best is not None and r - p >= best[1] - best[0]:
                break
            if crosses(word[p], word[r], n):
                best = (p, r)
                break
    if best is not None:
        p, r = best
        if r == p + 1:
            return _splice(word, p, p + 2, ptolemy_terms(
                ptolemy_labelings(word[p], word[r], n)[0], n))
        return _transport_and_resolve(word, p, r, n)
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            return _splice(word, p, p + 2, swap_terms(word[p], word[p + 1], n))
    return None


def _random_step(word: tuple, n: int, rng: random.Random) -> list | None:
    moves = []
    for p in range(len(word) - 1):
        x, y = word[p], word[p + 1]
        if crosses(x, y, n):
            moves.append(("ptolemy", p))
        elif x > y:
            moves.append(("swap", p))
    # the moving letter must commute past everything strictly between
    movable = [
        (p, r) for p, r in combinations(range(len(word)), 2)
        if r > p + 1 and crosses(word[p], word[r], n)
        and not any(word[s] == word[r] or crosses(word[s], word[r], n)
                    for s in range(p + 1, r))
    ]
    moves += [("transport", pr) for pr in movable]
    if not moves:
        return None
    kind, arg = rng.choice(moves)
    if kind == "ptolemy":
        labels = ptolemy_labelings(word[arg], word[arg + 1], n)[rng.randrange(2)]
        return _splice(word, arg, arg + 2, ptolemy_terms(labels, n))
    if kind == "swap":
        return _splice(word, arg, arg + 2, swap_terms(word[arg], word[arg + 1], n))
    p, r = arg
    return _transport_and_resolve(word, p, r, n, labeling=rng.randrange(2))


def _check_step(word: tuple, step: list, n: int) -> None:
    m = word_measure(word, n)
    for _, w in step:
        assert word_measure(w, n) < m, f"rewrite of {word} did not decrease measure: {w}"


def _accumulate(acc: dict, coeff: RingElem, nf) -> None:
    for w, c in nf:
        s = acc.get(w)
        s = coeff * c if s is None else s + coeff * c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)


@lru_cache(maxsize=None)
def _word_normal_form(word: tuple, n: int) -> tuple:
    step = rewrite_step(word, n)
    if step is None:
        return ((word, _constants(n)["one"]),)
    if __debug__:
        _check_step(word, step, n)
    acc: dict = {}
    for c, w in step:
        _accumulate(acc, c, _word_normal_form(w, n))
    return tuple(acc.items())


def normalize(a: AlgebraElem) -> AlgebraElem:
    """Unique expansion of ``a`` in the sorted non-crossing basis."""
    acc: dict = {}
    for w, c in a.items():
        _accumulate(acc, c, _word_normal_form(w, a.n))
    return AlgebraElem._raw(a.n, acc)


def randomized_normalize(a: AlgebraElem, seed: int) -> AlgebraElem:
    """Same result as :func:`normalize`, reached by randomly chosen rewrites."""
    rng = random.Random(seed)
    n = a.n
    memo: dict = {}

    def nf(word):
        if word in memo:
            return memo[word]
        step = _random_step(word, n, rng)
        if step is None:
            result = ((word, _constants(n)["one"]),)
        else:
            if __debug__:
                _check_step(word, step, n)
            acc: dict = {}
            for c, w in step:
                _accumulate(acc, c, nf(w))
            result = tuple(acc.items())
        memo[word] = result
        return result

    acc: dict = {}
    for w, c in sorted(a.items(), key=lambda t: (len(t[0]), t[0])):
        _accumulate(acc, c, nf(w))
    return AlgebraElem._raw(n, acc)


def equal_mod_relations(a: AlgebraElem, b: AlgebraElem) -> bool:
    if a.n != b.n:
        raise DimensionError(f"puncture counts differ: {a.n} vs {b.n}")
    return normalize(a - b).is_zero()


def enumerate_basis(n: int, d: int) -> list[tuple]:
    """Sorted non-crossing words of length ``d`` in lexicographic order."""
    return [w for w in combinations_with_replacement(all_chords(n), d)
            if not any(crosses(x, y, n) for x, y in combinations(w, 2))]
