import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twelverep.graphs import Graph, LabeledGraph, complete, edgeless, g1, co_g2, identity_labeling
from twelverep.words import (
    WordError,
    has_u_match,
    parse_pattern_word,
    parse_word,
    reduce,
    represents_witness,
    restrict,
    reverse,
    u_represents,
)

EX1 = (3, 5, 7, 8, 5, 3, 2, 8, 4, 7, 6, 1, 1, 2, 4, 6)
EX2 = (4, 6, 4, 3, 6, 5, 2, 3, 5, 1, 2, 1)

words = st.lists(st.integers(1, 9), min_size=1, max_size=12).map(tuple)
patterns = st.lists(st.integers(1, 2), min_size=1, max_size=4).filter(lambda u: 1 in u).map(tuple)


@pytest.mark.parametrize("w, expected", [
    ((2, 4, 6, 7), (1, 2, 3, 4)),
    ((4, 4, 6, 6, 3, 4), (2, 2, 3, 3, 1, 2)),
    ((5, 3, 2, 8, 4, 7, 6, 1), (5, 3, 2, 8, 4, 7, 6, 1)),
])
def test_reduce(w, expected):
    assert reduce(w) == expected


def test_reduce_empty():
    with pytest.raises(WordError, match="empty word"):
        reduce(())


def test_restrict_examples():
    assert restrict(EX1, {1, 7}) == (7, 7, 1, 1)
    assert restrict(EX2, {1, 2}) == (2, 1, 2, 1)
    assert restrict(EX1, set(EX1)) == EX1
    with pytest.raises(WordError, match="letter not in word"):
        restrict((1, 2), {3})


def test_reverse():
    assert reverse((1, 2)) == (2, 1)
    assert reverse((7, 7, 1, 1)) == (1, 1, 7, 7)


@pytest.mark.parametrize("w, u, expected", [
    ((7, 7, 1, 1), (1, 2), False),
    ((2, 1, 2, 1), (1, 2), True),
    ((1, 1, 1), (1, 2), False),
    ((3, 3), (1, 1), True),
    ((1, 2), (1, 1), False),
    ((5, 1, 3), (2, 1, 2), False),
    ((5, 1, 5), (2, 1, 2), True),
])
def test_has_u_match(w, u, expected):
    assert has_u_match(w, u) is expected


def test_reference_words_represent():
    assert u_represents(EX1, g1())
    assert u_represents(EX2, co_g2())


def test_two_vertices():
    empty = LabeledGraph(edgeless(2), (1, 2))
    edge = LabeledGraph(complete(2), (1, 2))
    assert u_represents((1, 2), empty)
    assert represents_witness((1, 2), edge) == (1, 2)


def test_alphabet_mismatch():
    with pytest.raises(WordError, match="alphabet mismatch"):
        u_represents((1, 2), LabeledGraph(edgeless(3), (1, 2, 3)))


def test_parsing():
    assert parse_word(" 10 2 3\n") == (10, 2, 3)
    assert parse_pattern_word("12") == (1, 2)
    assert parse_pattern_word("2 1 2") == (2, 1, 2)
    with pytest.raises(WordError):
        parse_pattern_word("22")
    with pytest.raises(WordError):
        parse_word("1 x")


@given(words)
def test_reduce_idempotent(w):
    assert reduce(reduce(w)) == reduce(w)
    assert set(reduce(w)) == set(range(1, len(set(w)) + 1))


@given(words, st.data())
def test_restrict_commutes(w, data):
    letters = sorted(set(w))
    b = data.draw(st.sets(st.sampled_from(letters)))
    c = data.draw(st.sets(st.sampled_from(letters))) & b
    assert restrict(restrict(w, b), c) == restrict(w, c)


@given(words)
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w


@given(words, patterns)
def test_match_invariant_under_reduction(w, u):
    assert has_u_match(w, u) == has_u_match(reduce(w), u)


@st.composite
def word_and_graph(draw):
    n = draw(st.integers(1, 6))
    extra = draw(st.lists(st.integers(1, n), max_size=n))
    w = draw(st.permutations(list(range(1, n + 1)) + extra))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return tuple(w), LabeledGraph(Graph.from_edges(n, edges), identity_labeling(n))


@settings(max_examples=300)
@given(word_and_graph())
def test_reverse_duality(case):
    w, lg = case
    assert u_represents(w, lg, (1, 2)) == u_represents(reverse(w), lg, (2, 1))


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_descending_and_ascending(n):
    labels = identity_labeling(n)
    assert u_represents(tuple(range(n, 0, -1)), LabeledGraph(complete(n), labels))
    assert u_represents(tuple(range(1, n + 1)), LabeledGraph(edgeless(n), labels))
