from __future__ import annotations

import itertools

import pytest

from stanley_solitaire.counting import MemoCache
from stanley_solitaire.formulas import count_syt_bruteforce, yfm
from stanley_solitaire.reduced_words import (
    check_permutation,
    count_reduced_words,
    count_reduced_words_bruteforce,
    format_permutation,
    inversions,
    longest_permutation,
    parse_permutation,
    stanley_witness,
)


@pytest.mark.parametrize("n,expected", [(1, (1,)), (3, (3, 2, 1)), (5, (5, 4, 3, 2, 1))])
def test_longest_permutation(n, expected):
    assert longest_permutation(n) == expected


def test_longest_permutation_needs_positive_n():
    with pytest.raises(ValueError):
        longest_permutation(0)


@pytest.mark.parametrize(
    "w,expected",
    [((1,), 1), ((2, 1), 1), ((3, 2, 1), 2), ((4, 2, 1, 3), 3), ((4, 3, 2, 1), 16)],
)
def test_count_reduced_words_examples(w, expected):
    assert count_reduced_words(w, MemoCache()) == expected


def test_descent_recursion_matches_word_search():
    # exhaustive words over s_1..s_{n-1} as the independent check
    cache = MemoCache()
    for n in range(1, 5):
        for w in itertools.permutations(range(1, n + 1)):
            direct = count_reduced_words_bruteforce(w)
            assert direct == count_reduced_words(w, cache)
            assert direct >= 1


def test_bruteforce_cap():
    with pytest.raises(ValueError):
        count_reduced_words_bruteforce((5, 4, 3, 2, 1))


def test_identity_has_one_word():
    assert count_reduced_words((1, 2, 3, 4), MemoCache()) == 1
    assert inversions((1, 2, 3, 4)) == 0


@pytest.mark.parametrize(
    "parts,expected",
    [((2, 1), (3, 2, 1)), ((3, 1), (4, 2, 1, 3)), ((3, 2), (4, 3, 1, 2))],
)
def test_stanley_witness_examples(parts, expected):
    assert stanley_witness(parts) == expected


@pytest.mark.parametrize("bad", [(2, 2), (1, 2), (), (3, 0)])
def test_stanley_witness_needs_strict_decrease(bad):
    with pytest.raises(ValueError):
        stanley_witness(bad)


def test_witness_reduced_words_match_formula():
    cache = MemoCache()
    for r in range(1, 6):
        for parts in itertools.combinations(range(5, 0, -1), r):
            w = stanley_witness(parts)
            assert len(w) == parts[0] + 1
            assert count_reduced_words(w, cache) == yfm(parts)


def test_staircase_matches_formula_and_tableaux():
    cache = MemoCache()
    for n in range(1, 7):
        staircase = tuple(range(n - 1, 0, -1))
        words = count_reduced_words(longest_permutation(n), cache)
        assert words == yfm(staircase)
        if n <= 5:
            assert words == count_syt_bruteforce(staircase)


def test_permutation_validation_and_text():
    assert parse_permutation("4,2,1,3") == (4, 2, 1, 3)
    assert format_permutation((4, 2, 1, 3)) == "4,2,1,3"
    with pytest.raises(ValueError):
        check_permutation((1, 3))
    with pytest.raises(ValueError):
        check_permutation((2, 2, 1))
