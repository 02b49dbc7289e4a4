"""Word triple algebra: interleaving membership, products, decomposition counts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import all_merges, merge_sequence_count, words_up_to
from spliffers import (
    InvalidTripleError,
    UTriple,
    count_decompositions,
    format_triple,
    format_word,
    is_interleaving,
    left,
    right,
    word,
)

short_words = st.lists(st.sampled_from("ab"), max_size=5).map(tuple)
generators = st.sampled_from("ab").flatmap(
    lambda a: st.sampled_from([left(a), right(a)])
)


def test_word_and_format_round_trip():
    assert word("aba") == ("a", "b", "a")
    assert word("-") == ()
    assert format_word(("a", "b")) == "ab"
    assert format_word(()) == "-"


def test_is_interleaving_figure_example():
    assert is_interleaving(word("aa"), word("b"), word("aba"))


def test_is_interleaving_empty_words():
    assert is_interleaving((), (), ())


def test_is_interleaving_rejects_non_merge():
    # The only merges of ab and a are aba and aab.
    assert all_merges(word("ab"), word("a")) == {word("aba"), word("aab")}
    assert not is_interleaving(word("ab"), word("a"), word("baa"))


def test_is_interleaving_rejects_bad_length():
    assert not is_interleaving(word("a"), word("b"), word("ab" * 3))


@given(short_words, short_words)
def test_every_merge_is_an_interleaving(l, r):
    for s in all_merges(l, r):
        assert is_interleaving(l, r, s)


@given(short_words, short_words, st.lists(st.sampled_from("ab"), max_size=10).map(tuple))
def test_is_interleaving_matches_merge_oracle(l, r, s):
    assert is_interleaving(l, r, s) == (s in all_merges(l, r))


def test_product_of_figure_path():
    t = UTriple.from_generators([left("a"), right("b"), left("a")])
    assert t == UTriple(word("aa"), word("b"), word("aba"))


def test_product_of_empty_sequence_is_identity():
    assert UTriple.from_generators([]) == UTriple((), (), ())


def test_product_of_left_then_right_blocks():
    t = UTriple.from_generators([left("a"), left("b"), right("a"), right("b")])
    assert t == UTriple(word("ab"), word("ab"), word("abab"))


@given(st.lists(generators, max_size=10))
def test_products_are_graded_triples(gens):
    t = UTriple.from_generators(gens)
    assert t.length == len(t.left) + len(t.right)
    assert is_interleaving(t.left, t.right, t.shuffled)


def test_invalid_triple_rejected():
    with pytest.raises(InvalidTripleError):
        UTriple(word("a"), word("b"), word("bb"))
    with pytest.raises(InvalidTripleError):
        UTriple(word("a"), (), word("aa"))


@pytest.mark.parametrize("w", ["", "a", "ab", "abba"])
def test_single_tape_triple_has_one_decomposition(w):
    assert count_decompositions(UTriple(word(w) if w else (), (), word(w) if w else ())) == 1


def test_two_letter_swap_has_two_decompositions():
    assert count_decompositions(UTriple(word("a"), word("a"), word("aa"))) == 2


def test_alternating_blocks_have_two_decompositions():
    t = UTriple(word("ab"), word("ab"), word("abab"))
    assert merge_sequence_count(t.left, t.right, t.shuffled) == 2
    assert count_decompositions(t) == 2


@given(st.lists(generators, max_size=10))
def test_count_matches_position_oracle(gens):
    t = UTriple.from_generators(gens)
    expected = merge_sequence_count(t.left, t.right, t.shuffled)
    assert expected >= 1
    assert count_decompositions(t) == expected


def test_count_oracle_sweep_short_triples():
    # Exhaustive over all valid triples with both output words of length <= 3.
    for l in words_up_to(("a", "b"), 3):
        for r in words_up_to(("a", "b"), 3):
            for s in all_merges(l, r):
                t = UTriple(l, r, s)
                assert count_decompositions(t) == merge_sequence_count(l, r, s)


def test_format_triple():
    assert format_triple(UTriple(word("aa"), word("b"), word("aba"))) == "aa | b | aba"
    assert format_triple(UTriple((), (), ())) == "- | - | -"
