import pytest
from hypothesis import given, settings

from chordskein.algebra import AlgebraElem, alg_linear_combine, alg_mul, bar, word_key
from chordskein.chords import chord
from chordskein.ring import DimensionError, RingElem

from conftest import P, elements


def test_word_product_concatenates():
    n = 4
    a = AlgebraElem.generator(n, 1, 3)
    b = AlgebraElem.generator(n, 2, 4)
    assert (a * b).sorted_terms() == [((chord(1, 3), chord(2, 4)), RingElem.one(n))]
    assert a * b != b * a


def test_scalars_and_zero():
    n = 3
    a = P("2*Q*b(1,2) - v(3)", n)
    assert a.degree() == 1
    assert (a - a).is_zero()
    assert a * 0 == AlgebraElem.zero(n)
    assert a.coeff(()) == -RingElem.vgen(n, 3)
    assert a.coeff((chord(1, 3),)).is_zero()


def test_word_key_orders_by_length_first():
    words = [(chord(2, 3),), (), (chord(1, 2), chord(1, 2)), (chord(1, 2),)]
    assert sorted(words, key=word_key) == [
        (), (chord(1, 2),), (chord(2, 3),), (chord(1, 2), chord(1, 2))]


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        alg_mul(AlgebraElem.one(3), AlgebraElem.one(4))
    with pytest.raises(DimensionError):
        AlgebraElem.one(3) + AlgebraElem.one(4)


def test_linear_combine():
    n = 3
    x, y = P("b(1,2)", n), P("b(2,3)", n)
    q = RingElem.qhalf(n, 2)
    assert alg_linear_combine([q, RingElem.one(n)], [x, y]) == P("q*b(1,2) + b(2,3)", n)
    with pytest.raises(ValueError):
        alg_linear_combine([q], [x, y])


def test_bar_on_example():
    n = 3
    assert bar(P("Q*b(1,2)*b(2,3)", n)) == P("Q^-1*b(2,3)*b(1,2)", n)


@settings(max_examples=50, deadline=None)
@given(elements(4), elements(4))
def test_bar_is_anti_multiplicative_involution(a, b):
    assert bar(bar(a)) == a
    assert bar(a * b) == bar(b) * bar(a)


@settings(max_examples=50, deadline=None)
@given(elements(4), elements(4), elements(4))
def test_free_algebra_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    s = RingElem.qhalf(4, 3) * RingElem.vgen(4, 2)
    assert a.scale(s) * b == a * b.scale(s)


@settings(max_examples=50, deadline=None)
@given(elements(5))
def test_json_roundtrip(a):
    assert AlgebraElem.from_json(a.to_json()) == a
