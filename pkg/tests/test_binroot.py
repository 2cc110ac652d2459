from math import isqrt

import pytest

from monoidlab.binroot import (binary_roots, count_primitive_words, is_small, small_binary_root,
                               small_root_census)
from monoidlab.errors import NotPrimitive
from monoidlab.factorization import WordSet, factorizations
from monoidlab.words import Alphabet, is_primitive, is_square_free
from oracles import brute_primitive_pair, member, words_upto


def test_examples():
    pairs = {r.pair for r in binary_roots("abcbac").roots}
    assert {WordSet(["ab", "cbac"]), WordSet(["abcb", "ac"])} <= pairs
    assert all(r.size == 6 for r in binary_roots("abcbac").roots)
    assert small_binary_root("abcbac") is None
    assert small_binary_root("abcaabcabc") == WordSet(["a", "bc"])
    report = binary_roots("abc")
    assert [r.pair for r in report.roots] == [WordSet(["a", "bc"]), WordSet(["ab", "c"])]
    assert small_binary_root("ab") is None


def test_all_distinct_letters_have_n_minus_one_roots():
    assert len(binary_roots("abcde").roots) == 4


def test_blocks_reassemble_the_word():
    report = binary_roots("abcaabcabc")
    for r in report.roots:
        assert "".join(r.blocks) == report.word
        assert set(r.blocks) == set(r.pair)


def test_non_primitive_rejected():
    with pytest.raises(NotPrimitive) as exc:
        binary_roots("abab")
    assert exc.value.root == "ab" and exc.value.exponent == 2


def test_is_small():
    assert is_small(3, 10) and not is_small(3, 9) and not is_small(6, 6)


def _brute_roots(w):
    facs = sorted({w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)})
    out = set()
    for i, x in enumerate(facs):
        for y in facs[i + 1:]:
            if member(w, (x, y)) and not member(w, (x,)) and not member(w, (y,)) and brute_primitive_pair(x, y):
                out.add(WordSet([x, y]))
    return out


def test_roots_match_brute_force():
    for w in words_upto("abc", 6):
        if is_primitive(w):
            assert {r.pair for r in binary_roots(w).roots} == _brute_roots(w), w


def test_root_factorizations_are_unique():
    for w in words_upto("ab", 10):
        if not is_primitive(w):
            continue
        for r in binary_roots(w).roots:
            assert len(factorizations(w, r.pair)) == 1


def test_square_free_words_have_no_quarter_root():
    for w in words_upto("abc", 10):
        if is_square_free(w) and is_primitive(w):
            assert all(4 * r.size >= len(w) for r in binary_roots(w).roots), w


def test_census_matches_direct_enumeration():
    for letters, n in (("ab", 11), ("abc", 8)):
        census = small_root_census(Alphabet(letters), n)
        direct = 0
        for w in words_upto(letters, n):
            if is_primitive(w):
                small = binary_roots(w).small_roots
                assert len(small) <= 1
                direct += len(small)
        assert census["incidences"] == direct
        assert census["violations"] == []


def test_primitive_word_counts():
    for k, letters in ((2, "ab"), (3, "abc")):
        for n in range(1, 9):
            brute = sum(1 for w in words_upto(letters, n) if len(w) == n and is_primitive(w))
            assert count_primitive_words(k, n) == brute


def test_census_pair_sizes():
    census = small_root_census(Alphabet("ab"), 14)
    assert isqrt(13) == 3 and census["small_pairs"] > 0
