"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also echoed in the pytest
terminal summary).  Run directly with ``python tests/test_acceptance.py`` to
get just the criterion lines.
"""

import random
import sys
import time
from itertools import combinations

from chordskein.algebra import AlgebraElem, bar
from chordskein.chords import chord
from chordskein.classical import plucker_quotient_rank, plucker_residual
from chordskein.curves import delta_closed, delta_subset, eta, gamma_plus, waterdrop
from chordskein.rewrite import enumerate_basis, normalize, randomized_normalize
from chordskein.ring import RingElem
from chordskein.sampling import random_element
from chordskein.sphere import ideal_generators, two_puncture_relation, unit_multiple

from conftest import ACCEPTANCE_LINES


def report(num, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_ptolemy_soundness():
    # taken literally with Q^{+-1} weights; the reduction engine uses q^{+-1}
    # (see test_rewrite for the q-weighted relation, which does vanish)
    start = time.perf_counter()
    checked = nonzero = 0
    for n in range(4, 9):
        Q, Qi = RingElem.qhalf(n, 1), RingElem.qhalf(n, -1)
        for a, b, c, d in combinations(range(1, n + 1), 4):
            for i, j, k, l in ((a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c)):
                rel = (AlgebraElem.word(n, [chord(i, k), chord(j, l)])
                       - AlgebraElem.word(n, [chord(i, l), chord(j, k)], Q)
                       - AlgebraElem.word(n, [chord(i, j), chord(k, l)], Qi))
                checked += 1
                nonzero += not normalize(rel).is_zero()
    elapsed = time.perf_counter() - start
    report(1, "Ptolemy soundness with q^{1/2} weights", nonzero == 0 and elapsed < 5,
           f"{nonzero}/{checked} relations nonzero, {elapsed:.2f}s")


def test_criterion_02_gamma_oracle():
    start = time.perf_counter()
    bad = []
    for n in range(3, 8):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if normalize(gamma_plus(i, j, n)) != normalize(eta(i, i % n + 1, j, n)):
                    bad.append((n, i, j))
    elapsed = time.perf_counter() - start
    report(2, "gamma closed form equals eta recursion, 3 <= n <= 7",
           not bad and elapsed < 60, f"{len(bad)} mismatches, {elapsed:.2f}s")


def test_criterion_03_delta_oracle():
    start = time.perf_counter()
    bad = [n for n in range(2, 8) if delta_closed(n) != delta_subset(range(1, n + 1), n)]
    elapsed = time.perf_counter() - start
    report(3, "delta closed form equals subset inversion, 2 <= n <= 7",
           not bad and elapsed < 120, f"mismatches at n = {bad or 'none'}, {elapsed:.2f}s")


def test_criterion_04_master_identity():
    bad = []
    for n in range(2, 7):
        delta = delta_closed(n)
        corr = RingElem.qhalf(n, -1) - RingElem.qhalf(n, 3)
        for i in range(1, n + 1):
            g = gamma_plus(i, i, n)
            rhs = g.scale(RingElem.qhalf(n, 2)) + delta.scale(corr * RingElem.vgen(n, i, -1))
            if normalize(bar(g)) != normalize(rhs):
                bad.append((n, i))
    report(4, "bar(gamma_ii) master identity, 2 <= n <= 6", not bad, f"{len(bad)} failures")


def test_criterion_05_two_punctures():
    n = 2
    q2 = RingElem.laurent_q(n, {4: 1, -4: 1})
    expected = AlgebraElem.word(n, [(1, 2), (1, 2)], RingElem.monomial(n, 1, 0, {1: 1, 2: 1})) \
        + AlgebraElem.scalar(q2 - 2)
    gens = ideal_generators(n)
    big_ok = gens.get("BIGCIRCLE") == expected == two_puncture_relation()
    gammas = [(idx, g) for idx, g in gens.family("GAMMA") if not g.is_zero()]
    units = {idx: unit_multiple(g, expected) for idx, g in gammas}
    ok = big_ok and all(u is not None for u in units.values())
    detail = ", ".join(f"GAMMA{idx} = ({u}) * BIGCIRCLE" for idx, u in units.items())
    report(5, "n=2 presentation", ok, detail)


def test_criterion_06_confluence():
    total, bad = 0, 0
    for seed in (11, 22, 33):
        rng = random.Random(seed)
        for t in range(170):
            n = rng.randint(2, 6)
            a = random_element(n, rng, max_degree=4, max_terms=5)
            total += 1
            bad += randomized_normalize(a, seed * 1000 + t) != normalize(a)
    report(6, "randomized reduction agrees with deterministic", bad == 0 and total >= 500,
           f"{bad}/{total} disagreements over 3 seeds")


def test_criterion_07_basis_rank():
    bad = [(n, d) for n in range(2, 7) for d in range(4)
           if len(enumerate_basis(n, d)) != plucker_quotient_rank(n, d)]
    spots = len(enumerate_basis(4, 2)) == 20 and len(enumerate_basis(5, 2)) == 50
    report(7, "basis size equals Pluecker quotient rank, n <= 6, d <= 3", not bad and spots,
           f"mismatches {bad}, spot values {'ok' if spots else 'wrong'}")


def test_criterion_08_plucker_residual():
    bad = [(n, s) for n in range(4, 9) for s in combinations(range(1, n + 1), 4)
           if not plucker_residual(*s, n).is_zero()]
    report(8, "Pluecker residuals vanish at q = 1, n <= 8", not bad, f"{len(bad)} nonzero")


def _nonzero_normal(rng):
    while True:
        n = rng.randint(2, 6)
        a = normalize(random_element(n, rng))
        if not a.is_zero():
            return a


def test_criterion_09_domain():
    rng = random.Random(909)
    zero_products = 0
    for _ in range(200):
        a = _nonzero_normal(rng)
        b = normalize(random_element(a.n, rng))
        while b.is_zero():
            b = normalize(random_element(a.n, rng))
        zero_products += normalize(a * b).is_zero()
    report(9, "no zero divisors among 200 random pairs", zero_products == 0,
           f"{zero_products} zero products")


def test_criterion_10_algebra_laws():
    rng = random.Random(1010)
    bad = 0
    for _ in range(200):
        n = rng.randint(2, 6)
        a, b, c = (normalize(random_element(n, rng, max_degree=3, max_terms=3)) for _ in range(3))
        left = normalize(normalize(a * b) * c)
        right = normalize(a * normalize(b * c))
        scalars = [RingElem.qhalf(n)] + [RingElem.vgen(n, i) for i in range(1, n + 1)]
        central = all(normalize(AlgebraElem.scalar(s) * a) == normalize(a * AlgebraElem.scalar(s))
                      == normalize(a).scale(s) for s in scalars)
        bad += left != right or not central
    report(10, "associativity and central scalars on 200 triples", bad == 0, f"{bad} failures")


def test_criterion_11_scalar_constants():
    ok = True
    for n in range(1, 7):
        Q = lambda a: RingElem.qhalf(n, a)
        for i in range(1, n + 1):
            v, vinv = RingElem.vgen(n, i), RingElem.vgen(n, i, -1)
            w, wbar = waterdrop(i, n), waterdrop(i, n, conjugated=True)
            ok &= v * w == Q(1) - Q(5)
            ok &= v * wbar == Q(-1) - Q(-5)
            ok &= bar(AlgebraElem.scalar(w)) == AlgebraElem.scalar(wbar)
            ok &= wbar == Q(2) * w + (Q(-1) - Q(3)) * (-Q(4) - Q(-4)) * vinv
    report(11, "waterdrop, conjugate waterdrop and their scalar identity", ok)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
