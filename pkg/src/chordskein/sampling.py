"""Random ring and algebra elements for tests and verification runs."""

from __future__ import annotations

import random

from .algebra import AlgebraElem
from .chords import all_chords
from .ring import RingElem


def random_ring_elem(n: int, rng: random.Random, max_terms: int = 3,
                     q_span: int = 4, v_span: int = 1, c_span: int = 3) -> RingElem:
    """A nonzero Laurent polynomial with small exponents and coefficients."""
    while True:
        r = RingElem.zero(n)
        for _ in range(rng.randint(1, max_terms)):
            c = rng.choice([k for k in range(-c_span, c_span + 1) if k])
            v = {i: rng.randint(-v_span, v_span) for i in range(1, n + 1)}
            r = r + RingElem.monomial(n, c, rng.randint(-q_span, q_span), v)
        if r:
            return r


def random_word(n: int, rng: random.Random, max_degree: int = 4) -> tuple:
    gens = all_chords(n)
    return tuple(rng.choice(gens) for _ in range(rng.randint(0, max_degree)))


def random_element(n: int, rng: random.Random, max_degree: int = 4,
                   max_terms: int = 5) -> AlgebraElem:
    """A nonzero element with at most ``max_terms`` words of degree <= ``max_degree``."""
    while True:
        terms = [(random_word(n, rng, max_degree), random_ring_elem(n, rng, max_terms=2))
                 for _ in range(rng.randint(1, max_terms))]
        a = AlgebraElem(n, terms)
        if not a.is_zero():
            return a
