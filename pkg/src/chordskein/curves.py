"""Named curve classes written as chord polynomials.

Each family is available through two independent routes (closed formula and
recursion) so the two can be checked against each other after reduction.
Subsets of vertices are passed as iterables and handled as sorted tuples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .algebra import AlgebraElem, bar
from .chords import chord, cyclic_interval
from .rewrite import normalize
from .ring import RingElem


def _check_vertex(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"vertex {i} out of range 1..{n}")


def _subset(I, n: int) -> tuple:
    I = tuple(sorted(set(I)))
    for i in I:
        _check_vertex(i, n)
    return I


def waterdrop(i: int, n: int, conjugated: bool = False) -> RingElem:
    """``omega_i = (Q - Q^5) v_i^-1``; its conjugate inverts ``Q``."""
    _check_vertex(i, n)
    w = (RingElem.qhalf(n, 1) - RingElem.qhalf(n, 5)) * RingElem.vgen(n, i, -1)
    return w.invert_q() if conjugated else w


def trivial_loop(n: int) -> RingElem:
    """Value ``-q^2 - q^-2`` of a contractible loop."""
    return -(RingElem.qhalf(n, 4) + RingElem.qhalf(n, -4))


def _edge(i: int, j: int, n: int) -> AlgebraElem:
    # b_ii stands for the conjugate waterdrop
    if i == j:
        return AlgebraElem.scalar(waterdrop(i, n, conjugated=True))
    return AlgebraElem.generator(n, i, j)


def _vprod(vertices, n: int) -> RingElem:
    r = RingElem.one(n)
    for v in vertices:
        r = r * RingElem.vgen(n, v)
    return r


def _path_word(path, n: int) -> AlgebraElem:
    """Ordered product of edges along ``path``."""
    out = AlgebraElem.one(n)
    for a, b in zip(path, path[1:]):
        out = out * _edge(a, b, n)
    return out


def gamma_plus(i: int, j: int, n: int) -> AlgebraElem:
    """Clockwise outer arc from ``v_i`` to ``v_j`` as a signed sum of clockwise paths."""
    if n < 2:
        raise ValueError("need at least two punctures")
    _check_vertex(i, n)
    _check_vertex(j, n)
    between = cyclic_interval(i, j, n)
    m = len(between)
    total = AlgebraElem.zero(n)
    for size in range(m + 1):
        coeff = RingElem.monomial(n, (-1) ** (m - size), 2 * m - size)
        for I in combinations(between, size):
            term = _path_word((i, *I, j), n).scale(coeff * _vprod(I, n))
            total = total + term
    return total


def gamma_minus(i: int, j: int, n: int) -> AlgebraElem:
    """Counterclockwise outer arc; for ``i == j`` this is the waterdrop."""
    if i == j:
        return AlgebraElem.scalar(waterdrop(i, n))
    return gamma_plus(j, i, n)


def eta(i: int, k: int, j: int, n: int) -> AlgebraElem:
    """Arc from ``v_i`` leaving the polygon before ``v_k`` and running clockwise to ``v_j``.

    Evaluated through the puncture recursion
    ``eta_ikj = Q v_k b_ik eta_{k,k+1,j} - q eta_{i,k+1,j}``.
    """
    for x in (i, k, j):
        _check_vertex(x, n)
    if k != j and k not in cyclic_interval(i, j, n):
        raise ValueError(f"k={k} must lie in the clockwise interval ({i},{j}) or equal {j}")
    return _eta(i, k, j, n)


@lru_cache(maxsize=None)
def _eta(i: int, k: int, j: int, n: int) -> AlgebraElem:
    if k == j:
        return _edge(i, j, n)
    nxt = k % n + 1
    head = (_edge(i, k, n) * _eta(k, nxt, j, n)).scale(
        RingElem.monomial(n, 1, 1, {k: 1}))
    return head - _eta(i, nxt, j, n).scale(RingElem.qhalf(n, 2))


def mu(I, n: int) -> AlgebraElem:
    """Vertex-weighted product of the polygon edges on ``I`` in increasing order."""
    I = _subset(I, n)
    if not I:
        return AlgebraElem.scalar(trivial_loop(n))
    if len(I) == 1:
        (i,) = I
        return AlgebraElem.scalar(RingElem.vgen(n, i) * waterdrop(i, n, conjugated=True))
    return _path_word(I + I[:1], n).scale(_vprod(I, n))


def _stair_step(n: int) -> RingElem:
    return RingElem.qhalf(n, 1) - RingElem.qhalf(n, -3)


def _nu_base(I: tuple, n: int) -> AlgebraElem:
    if not I:
        return AlgebraElem.scalar(trivial_loop(n))
    (i,) = I
    return AlgebraElem.scalar(RingElem.vgen(n, i) * waterdrop(i, n))


def nu(I, n: int, method: str = "recursive") -> AlgebraElem:
    """Stair configuration on ``I``, either by recursion or by its unrolled sum.

    Neither route is reduced; compare through :func:`normalize`.
    """
    I = _subset(I, n)
    if len(I) <= 1:
        return _nu_base(I, n)
    if method == "recursive":
        return _nu_recursive(I, n)
    if method == "closed":
        c = _stair_step(n)
        qinv = RingElem.qhalf(n, -2)
        total = _nu_base(I[-1:], n).scale(c ** (len(I) - 1))
        for j in range(1, len(I)):
            total = total + mu(I[j - 1:], n).scale(qinv * c ** (j - 1))
        return total
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _nu_recursive(I: tuple, n: int) -> AlgebraElem:
    if len(I) <= 1:
        return _nu_base(I, n)
    return mu(I, n).scale(RingElem.qhalf(n, -2)) + _nu_recursive(I[1:], n).scale(_stair_step(n))


def _subsets(I: tuple):
    for size in range(len(I) + 1):
        yield from combinations(I, size)


def delta_subset(I, n: int) -> AlgebraElem:
    """Loop around the vertices of ``I`` by subset inversion of the stair classes."""
    I = _subset(I, n)
    total = AlgebraElem.zero(n)
    for J in _subsets(I):
        coeff = RingElem.monomial(n, (-1) ** (len(I) - len(J)), 2 * len(I) - len(J))
        total = total + _nu_recursive(J, n).scale(coeff)
    return normalize(total)


def nu_from_deltas(I, n: int) -> AlgebraElem:
    """Forward subset transform ``sum_J q^{|I|/2 - |J|} delta_J``."""
    I = _subset(I, n)
    total = AlgebraElem.zero(n)
    for J in _subsets(I):
        total = total + delta_subset(J, n).scale(RingElem.qhalf(n, len(I) - 2 * len(J)))
    return normalize(total)


def delta_closed(n: int) -> AlgebraElem:
    """Big loop around all punctures by its closed formula, reduced."""
    if n < 2:
        raise ValueError("need at least two punctures")
    sign = (-1) ** (n - 1)
    total = AlgebraElem.scalar(
        RingElem.laurent_q(n, {2 * (n - 2): sign})
        + RingElem.laurent_q(n, {-2 * (n - 2): sign}))
    verts = tuple(range(1, n + 1))
    for size in range(2, n + 1):
        for I in combinations(verts, size):
            coeff = RingElem.monomial(n, (-1) ** (n - size), 2 * n - 4 * I[0] + 2 - size)
            total = total + _path_word(I + I[:1], n).scale(coeff * _vprod(I, n))
    return normalize(total)


def master_identity_holds(i: int, n: int) -> bool:
    """``bar(gamma_ii^+) == q gamma_ii^+ + (Q^-1 - Q^3) v_i^-1 delta`` after reduction."""
    _check_vertex(i, n)
    g = gamma_plus(i, i, n)
    corr = (RingElem.qhalf(n, -1) - RingElem.qhalf(n, 3)) * RingElem.vgen(n, i, -1)
    rhs = g.scale(RingElem.qhalf(n, 2)) + delta_closed(n).scale(corr)
    return normalize(bar(g)) == normalize(rhs)
