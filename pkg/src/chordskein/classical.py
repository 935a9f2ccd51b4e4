"""The q = 1 limit: commutative chord polynomials and Pluecker straightening.

The straightening here is written independently of :mod:`chordskein.rewrite`
so that comparing the two is a genuine cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraElem
from .chords import all_chords, chord, crosses, is_clockwise
from .rewrite import enumerate_basis, normalize
from .ring import RingElem


def classicalize(a: AlgebraElem) -> AlgebraElem:
    """Set ``q^{1/2} = 1`` and forget the order of letters."""
    return AlgebraElem(a.n, [(tuple(sorted(w)), c.specialize_q1()) for w, c in a.items()])


def classical_product(a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
    return classicalize(a * b)


@lru_cache(maxsize=None)
def _straighten_word(word: tuple, n: int) -> tuple:
    for x, y in combinations(word, 2):
        if crosses(x, y, n):
            break
    else:
        return ((word, 1),)
    a, c = x
    b, d = y if a < y[0] < c else (y[1], y[0])
    # (a, b, c, d) is clockwise; b_ac b_bd = b_ad b_bc + b_ab b_cd at q = 1
    rest = list(word)
    rest.remove(x)
    rest.remove(y)
    out: dict = {}
    for new in ((chord(a, d), chord(b, c)), (chord(a, b), chord(c, d))):
        for w, k in _straighten_word(tuple(sorted(rest + list(new))), n):
            out[w] = out.get(w, 0) + k
    return tuple((w, k) for w, k in out.items() if k)


def classical_normal_form(a: AlgebraElem) -> AlgebraElem:
    """Straighten a commutative element into non-crossing monomials."""
    terms = []
    for w, c in a.items():
        c = c.specialize_q1()
        for sw, k in _straighten_word(tuple(sorted(w)), a.n):
            terms.append((sw, c * k))
    return AlgebraElem(a.n, terms)


def plucker_residual(i: int, j: int, k: int, l: int, n: int) -> AlgebraElem:
    """Reduced ``b_ik b_jl - b_ij b_kl - b_il b_jk`` at q = 1; always zero."""
    if not is_clockwise((i, j, k, l), n):
        raise ValueError(f"({i},{j},{k},{l}) is not a clockwise 4-subset")
    w = lambda *pairs: AlgebraElem.word(n, pairs)
    rel = w((i, k), (j, l)) - w((i, j), (k, l)) - w((i, l), (j, k))
    return classicalize(normalize(rel))


def plucker_quotient_rank(n: int, d: int) -> int:
    """Dimension of the degree-``d`` part of Q[b_ij] modulo the Pluecker relations."""
    gens = all_chords(n)
    monos = list(combinations_with_replacement(gens, d))
    if d < 2 or n < 4:
        return len(monos)
    index = {m: t for t, m in enumerate(monos)}
    rows = {}
    for a, b, c, e in combinations(range(1, n + 1), 4):
        rel = ((1, (chord(a, c), chord(b, e))),
               (-1, (chord(a, b), chord(c, e))),
               (-1, (chord(a, e), chord(b, c))))
        for m in combinations_with_replacement(gens, d - 2):
            row = {}
            for sign, pair in rel:
                col = index[tuple(sorted(m + pair))]
                row[col] = row.get(col, 0) + sign
            row = {col: QQ(v) for col, v in row.items() if v}
            if row:
                rows[len(rows)] = row
    relation_rank = DomainMatrix(rows, (len(rows), len(monos)), QQ).rank()
    return len(monos) - relation_rank


def straightening_rank_oracle(n: int, d: int) -> bool:
    """Non-crossing monomial count equals the exact quotient dimension."""
    if not (3 <= n <= 6 and 0 <= d <= 3):
        raise ValueError(f"rank oracle limited to 3 <= n <= 6, 0 <= d <= 3 (got n={n}, d={d})")
    return plucker_quotient_rank(n, d) == len(enumerate_basis(n, d))


def specialization_commutes_check(a: AlgebraElem) -> bool:
    """Reducing then specializing agrees with specializing then straightening."""
    return classicalize(normalize(a)) == classical_normal_form(classicalize(a))
