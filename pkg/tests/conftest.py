import random

import pytest
from hypothesis import strategies as st

from chordskein.algebra import AlgebraElem
from chordskein.expr import parse_element
from chordskein.ring import RingElem
from chordskein.sampling import random_element, random_ring_elem

# lines collected by test_acceptance, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def P(src, n):
    return parse_element(src, n)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def ring_elems(n):
    return seeds.map(lambda s: random_ring_elem(n, random.Random(s)))


def elements(n, max_degree=3, max_terms=4):
    return seeds.map(lambda s: random_element(n, random.Random(s), max_degree, max_terms))


@pytest.fixture
def rng():
    return random.Random(1234)
