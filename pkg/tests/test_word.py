import pytest
from hypothesis import given, settings, strategies as st

from artinstab.diagram import INFINITY, CoxeterDiagram
from artinstab.errors import ClassSizeExceeded
from artinstab.word import (IDENTITY, ArtinMonoid, MonoidElement, alternating_product, canonicalize,
                            equivalence_class, format_word, get_monoid, letter_set,
                            letterwise_commutes, multiply, parse_word)

from conftest import el
from oracles import naive_class


def test_alternating_product():
    assert alternating_product(1, 2, 3) == (1, 2, 1)
    assert alternating_product(1, 2, 0) == ()
    assert alternating_product(2, 1, 2) == (2, 1)
    with pytest.raises(ValueError):
        alternating_product(1, 1, 2)


def test_class_of_braid_relation(b3):
    assert equivalence_class(b3, (1, 2, 1)) == {(1, 2, 1), (2, 1, 2)}
    assert equivalence_class(b3, ()) == {()}


def test_free_pair_has_singleton_classes():
    free = CoxeterDiagram.from_mapping((1, 2), {(1, 2): INFINITY})
    assert equivalence_class(free, (1, 2)) == {(1, 2)}
    assert equivalence_class(free, (2, 1, 2, 1)) == {(2, 1, 2, 1)}


def test_canonicalize_examples(b3):
    a = canonicalize(b3, (2, 1, 2))
    assert a.canonical == (1, 2, 1) and a.length == 3
    assert canonicalize(b3, (1, 2)).canonical == (1, 2)
    assert canonicalize(b3, ()) == IDENTITY and IDENTITY.length == 0


def test_multiply_examples(b3):
    assert multiply(b3, el(b3, "21"), el(b3, "2")) == el(b3, "121")
    a = el(b3, "1221")
    assert multiply(b3, IDENTITY, a) == a == multiply(b3, a, IDENTITY)
    assert multiply(b3, el(b3, "1"), el(b3, "1")).canonical == (1, 1)


def test_letter_sets(b3, b4):
    assert letter_set(b3, el(b3, "121")) == {1, 2}
    assert letter_set(b3, IDENTITY) == set()
    assert letter_set(b4, el(b4, "33")) == {3}


def test_letterwise_commutes(b3, b4):
    assert letterwise_commutes(b4, el(b4, "1"), el(b4, "3"))
    assert not letterwise_commutes(b3, el(b3, "1"), el(b3, "2"))
    assert not letterwise_commutes(b3, el(b3, "1"), el(b3, "1"))


def test_word_literals():
    assert parse_word("121") == (1, 2, 1)
    assert parse_word("1.12.3") == (1, 12, 3)
    assert parse_word("e") == ()
    assert format_word((1, 12)) == "1.12"
    assert format_word(()) == "e"
    with pytest.raises(ValueError):
        parse_word("1a")


def test_unknown_letter_rejected(b3):
    with pytest.raises(ValueError):
        get_monoid(b3).element((3,))


def test_class_cap_is_loud():
    mon = ArtinMonoid(CoxeterDiagram.braid(5), class_cap=10)
    with pytest.raises(ClassSizeExceeded):
        mon.element((1, 3, 2, 4, 1, 3))


def test_element_counts(b3, b4):
    assert [len(get_monoid(b3).elements_of_length(L)) for L in range(7)] == [1, 2, 4, 7, 12, 20, 33]
    assert [len(get_monoid(b4).elements_of_length(L)) for L in range(5)] == [1, 3, 8, 19, 43]


def test_elements_are_shortlex_sorted(b4):
    elems = get_monoid(b4).elements(4)
    assert elems == sorted(elems)
    assert all(isinstance(e, MonoidElement) for e in elems)


@pytest.mark.parametrize("n, max_len", [(3, 6), (4, 5)])
def test_classes_closed_under_rewriting(n, max_len):
    d = CoxeterDiagram.braid(n)
    mon = get_monoid(d)
    for a in mon.elements(max_len):
        cls = mon.members(a)
        assert naive_class(d, a.canonical) == cls
        assert a.canonical == min(cls)


def test_letter_set_constant_on_class(b4):
    mon = get_monoid(b4)
    for a in mon.elements(4):
        assert all(set(w) == a.letters for w in mon.members(a))


words3 = st.lists(st.sampled_from([1, 2, 3]), max_size=6).map(tuple)


@settings(max_examples=200, deadline=None)
@given(words3, words3)
def test_length_is_additive(u, v):
    d = CoxeterDiagram.braid(4)
    a, b = canonicalize(d, u), canonicalize(d, v)
    assert multiply(d, a, b).length == a.length + b.length


# three factors of length 6 can produce classes beyond the class cap
words3_short = st.lists(st.sampled_from([1, 2, 3]), max_size=4).map(tuple)


@settings(max_examples=200, deadline=None)
@given(words3_short, words3_short, words3_short)
def test_multiplication_associative(u, v, w):
    d = CoxeterDiagram.braid(4)
    a, b, c = (canonicalize(d, x) for x in (u, v, w))
    assert multiply(d, multiply(d, a, b), c) == multiply(d, a, multiply(d, b, c))
