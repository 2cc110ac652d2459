from itertools import combinations

import pytest

from monoidlab.errors import TooLarge
from monoidlab.factorization import WordSet, is_code
from monoidlab.hull import (combinatorial_rank, covering_pairs, covering_sets, free_hull, free_rank,
                            graph_lemma_check)
from oracles import all_factors, brute_rank, member, min_cover_sets, shortest_ambiguous, words_upto

FIG1 = WordSet("a ab abc bca acb cba".split())


def test_fig1_hull_rank_components():
    assert free_hull(FIG1).basis == WordSet(["a", "ab", "bc", "cb"])
    assert free_rank(FIG1) == 4
    assert combinatorial_rank(FIG1).rank == 3
    report = graph_lemma_check(FIG1)
    assert report.components == 4 and report.holds and not report.is_code


def test_code_and_power_examples():
    X = WordSet(["aa", "ba", "baa"])
    assert free_rank(X) == 3
    r = combinatorial_rank(X)
    assert r.rank == 2 and r.witness == WordSet(["a", "b"])
    Y = WordSet(["aa", "aaa"])
    assert free_rank(Y) == 1 and combinatorial_rank(Y).rank == 1
    assert combinatorial_rank(Y).witness == WordSet(["a"])


def test_hull_examples():
    assert free_hull(WordSet(["aabca", "aa", "bcaaa"])).basis == WordSet(["aa", "bca"])
    assert free_hull(WordSet(["abab", "abababab"])).basis == WordSet(["abab"])
    assert free_hull(WordSet(["abab", "ababab"])).basis == WordSet(["ab"])
    assert free_hull(WordSet(["a", "bc"])).basis == WordSet(["a", "bc"])


def test_rank_modes():
    assert combinatorial_rank(FIG1, mode="decide_le_2").rank == 3
    assert not combinatorial_rank(FIG1, mode="decide_le_2").exact
    three = WordSet(["a", "cbd", "dbd"])
    r = combinatorial_rank(three, mode="decide_le_2")
    assert r.rank == 3 and r.exact
    with pytest.raises(ValueError):
        combinatorial_rank(three, mode="guess")


def test_exact_rank_too_large():
    with pytest.raises(TooLarge):
        combinatorial_rank(WordSet(["abcabcabcabcabcabcabcabc", "cbacbacbacbacbacbacba"]))
    # decide_le_2 has no size limit
    assert combinatorial_rank(WordSet(["ab" * 15, "ba" * 15]), mode="decide_le_2").rank == 2


def _sets(letters, maxlen, maxsize):
    ws = list(words_upto(letters, maxlen))
    for k in range(1, maxsize + 1):
        yield from combinations(ws, k)


def test_hull_is_free_minimal_and_contains_x():
    for X in _sets("ab", 3, 3):
        ws = WordSet(X)
        H = free_hull(ws).basis
        assert shortest_ambiguous(list(H), 12) is None
        assert all(member(x, H) for x in ws)
        # any code built from factors of X whose star contains X also contains the hull
        facs = sorted(set().union(*(all_factors(x) for x in X)))
        for size in range(1, 3):
            for C in combinations(facs, size):
                if all(member(x, C) for x in X) and shortest_ambiguous(C, 10) is None:
                    assert all(member(h, C) for h in H), (X, C, H)


def test_defect_inequality():
    for X in _sets("abc", 2, 3):
        ws = WordSet(X)
        r, rf = combinatorial_rank(ws).rank, free_rank(ws)
        assert r <= rf <= len(ws)
        assert (rf < len(ws)) == (not is_code(ws))


def test_decide_le_2_matches_brute_rank():
    for X in _sets("ab", 3, 3):
        ws = WordSet(X)
        brute = brute_rank(X, 2) or 3
        got = combinatorial_rank(ws, mode="decide_le_2")
        assert min(got.rank, 3) == brute, X
        if got.rank <= 2:
            assert all(member(x, got.witness) for x in X)


def test_exact_rank_matches_cover_oracle():
    for X in _sets("abc", 3, 3):
        if len(X) < 3 or sum(map(len, X)) > 7:
            continue
        got = combinatorial_rank(WordSet(X)).rank
        assert min_cover_sets(X, got) and not min_cover_sets(X, got - 1) if got > 1 else True
        assert brute_rank(X, 3) == got


def test_covering_pairs_match_oracle():
    for X in _sets("ab", 3, 2):
        got = set(covering_pairs(list(X)))
        brute = {WordSet(p) for p in min_cover_sets(X, 2) if len(p) == 2
                 and any(not member(x, p[:1]) for x in X) and any(not member(x, p[1:]) for x in X)}
        assert got == brute, X


def test_covering_sets_complete():
    X = ["abcb", "cba"]
    got = {G for G in covering_sets(X, 3) if len(G) <= 3}
    brute = {WordSet(Y) for Y in min_cover_sets(X, 3)}
    # covering_sets only keeps sets in which every element is used
    assert got <= brute
    assert {G for G in brute if all(any(g in x for x in X) for g in G)} >= got
    assert WordSet(["a", "b", "c"]) in got


def test_rank_two_example_with_two_witnesses():
    X = WordSet(["aabca", "aa", "bcaaa"])
    r = combinatorial_rank(X)
    assert r.rank == 2 and r.witness == WordSet(["a", "bc"])
    # the hull is a different rank-two set
    assert free_hull(X).basis == WordSet(["aa", "bca"])


def test_two_word_sets_rank_equals_free_rank():
    for X in _sets("abc", 3, 2):
        if len(X) == 2:
            ws = WordSet(X)
            assert combinatorial_rank(ws).rank == free_rank(ws), X
