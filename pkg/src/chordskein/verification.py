"""Verification suites shared by the command line and the test suite.

Each suite returns a list of failure descriptions; an empty list is a pass.
"""

from __future__ import annotations

import random
from itertools import combinations

from .algebra import AlgebraElem
from .chords import all_chords, chord, crosses, ptolemy_labelings
from .classical import plucker_residual, specialization_commutes_check, straightening_rank_oracle
from .curves import delta_closed, delta_subset, eta, gamma_plus, master_identity_holds
from .rewrite import normalize, randomized_normalize
from .ring import RingElem
from .sampling import random_element
from .sphere import ideal_generators, verify_conjugate_waterdrop

SUITES = ("gamma", "delta", "master", "confluence", "classical")


def gamma_suite(n: int) -> list[str]:
    fails = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if normalize(gamma_plus(i, j, n)) != normalize(eta(i, i % n + 1, j, n)):
                fails.append(f"gamma({i},{j}) differs from eta({i},{i % n + 1},{j})")
    return fails


def delta_suite(n: int) -> list[str]:
    if delta_closed(n) != delta_subset(range(1, n + 1), n):
        return [f"closed delta differs from subset inversion at n={n}"]
    return []


def master_suite(n: int) -> list[str]:
    fails = [f"master identity fails at i={i}" for i in range(1, n + 1)
             if not master_identity_holds(i, n)]
    if not verify_conjugate_waterdrop(n):
        fails.append("conjugate waterdrop relation is not in the ideal")
    return fails


def confluence_suite(n: int, samples: int = 60, seeds=(0, 1, 2)) -> list[str]:
    fails = []
    for c1, c2 in combinations(all_chords(n), 2):
        if crosses(c1, c2, n):
            for labels in ptolemy_labelings(c1, c2, n):
                lhs = normalize(AlgebraElem.word(n, [c1, c2]))
                i, j, k, l = labels
                rhs = normalize(AlgebraElem.word(n, [chord(i, l), chord(j, k)], RingElem.qhalf(n, 2))
                                + AlgebraElem.word(n, [chord(i, j), chord(k, l)], RingElem.qhalf(n, -2)))
                if lhs != rhs:
                    fails.append(f"Ptolemy labeling {labels} not sound")
    for f, idx, g in ideal_generators(n).relations:
        if f in ("PTOLEMY", "QCOMM1", "QCOMM2") and not normalize(g).is_zero():
            fails.append(f"{f}{idx} does not reduce to zero")
    for seed in seeds:
        rng = random.Random(seed)
        for t in range(samples):
            a = random_element(n, rng)
            if randomized_normalize(a, seed * 100003 + t) != normalize(a):
                fails.append(f"seed {seed} sample {t}: reduction paths disagree")
    return fails


def classical_suite(n: int, samples: int = 40) -> list[str]:
    fails = []
    for a, b, c, d in combinations(range(1, n + 1), 4):
        if not plucker_residual(a, b, c, d, n).is_zero():
            fails.append(f"Pluecker residual nonzero at ({a},{b},{c},{d})")
    if 3 <= n <= 6:
        for d in range(4):
            if not straightening_rank_oracle(n, d):
                fails.append(f"basis count differs from quotient rank at degree {d}")
    rng = random.Random(n)
    for t in range(samples):
        if not specialization_commutes_check(random_element(n, rng)):
            fails.append(f"sample {t}: specialization does not commute with reduction")
    return fails


_RUNNERS = {
    "gamma": gamma_suite,
    "delta": delta_suite,
    "master": master_suite,
    "confluence": confluence_suite,
    "classical": classical_suite,
}


def run_suite(name: str, n: int) -> list[str]:
    names = SUITES if name == "all" else (name,)
    fails = []
    for s in names:
        fails += [f"[{s}] {msg}" for msg in _RUNNERS[s](n)]
    return fails
