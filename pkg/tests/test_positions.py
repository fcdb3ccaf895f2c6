from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import all_positions, bf_children, brute_force_count
from stanley_solitaire.positions import (
    IllegalMoveError,
    ParseError,
    apply_move,
    format_position,
    legal_moves,
    normalize,
    parse_position,
    total_candies,
)

WORKED_EXAMPLE = (4, 5, 0, 0, 2, 0, 3, 1)


def test_normalize_trims_trailing_zeros():
    assert normalize([4, 5, 0, 0, 2, 0, 3, 0, 0]) == (4, 5, 0, 0, 2, 0, 3)


def test_normalize_all_zeros_gives_empty():
    assert normalize([0, 0, 0]) == ()
    assert normalize([]) == ()


def test_normalize_trims_leading_zeros():
    assert normalize([0, 0, 0, 2]) == (2,)


def test_normalize_rejects_negative():
    with pytest.raises(ValueError):
        normalize([2, -1, 3])


@given(st.lists(st.integers(min_value=0, max_value=6), max_size=10))
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize(once) == once
    assert sum(once) == sum(raw)
    if once:
        assert once[0] > 0 and once[-1] > 0


def test_legal_moves_worked_example():
    assert legal_moves(WORKED_EXAMPLE) == [
        (2, (4, 0, 4, 0, 2, 0, 3, 1)),
        (5, (4, 5, 0, 0, 0, 1, 3, 1)),
        (7, (4, 5, 0, 0, 2, 0, 1, 2)),
        (8, (4, 5, 0, 0, 2, 0, 3)),
    ]


def test_legal_moves_empty_and_singleton():
    assert legal_moves(()) == []
    assert legal_moves((1,)) == [(1, ())]


def test_apply_move_two_one():
    assert apply_move((2, 1), 1) == (1, 1)
    assert apply_move((2, 1), 2) == (2,)


def test_apply_move_equal_piles_is_illegal():
    with pytest.raises(IllegalMoveError) as exc:
        apply_move((2, 2, 1), 1)
    assert exc.value.index == 1


@pytest.mark.parametrize("index", [0, -1, 4])
def test_apply_move_out_of_range(index):
    with pytest.raises(IllegalMoveError):
        apply_move((2, 2, 1), index)


def test_total_candies():
    assert total_candies(WORKED_EXAMPLE) == 15
    assert total_candies(()) == 0
    assert total_candies((2, 2, 1)) == 5


def test_children_lose_one_candy_and_stay_normalized():
    for p in all_positions(6, 4):
        options = legal_moves(p)
        assert options, f"nonempty {p} must have a move"
        for i, child in options:
            assert total_candies(child) == total_candies(p) - 1
            assert normalize(child) == child
            assert apply_move(p, i) == child


def test_moves_agree_with_independent_rules():
    for p in all_positions(6, 4):
        assert [c for _, c in legal_moves(p)] == bf_children(p)


def test_every_maximal_play_has_length_total_candies():
    # every path from p to () takes exactly sum(p) moves
    def longest_and_shortest(p):
        if not p:
            return 0, 0
        spans = [longest_and_shortest(c) for _, c in legal_moves(p)]
        return 1 + max(s[0] for s in spans), 1 + min(s[1] for s in spans)

    for p in all_positions(6, 3):
        high, low = longest_and_shortest(p)
        assert high == low == total_candies(p)


def test_parse_and_format_round_trip():
    assert parse_position("2,2,1") == (2, 2, 1)
    assert parse_position("[2,2,1]") == (2, 2, 1)
    assert parse_position("[]") == ()
    assert parse_position("0,3,0") == (3,)
    assert parse_position(" 4 , 5 , 0 ") == (4, 5)
    assert format_position((2, 2, 1)) == "[2,2,1]"
    assert format_position(()) == "[]"
    for p in [(2, 2, 1), (), (4, 5, 0, 0, 2, 0, 3, 1)]:
        assert parse_position(format_position(p)) == p


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),
        ("   ", 0),
        ("2,,1", 2),
        ("2,-1", 2),
        ("2,x", 2),
        ("[2,1", 4),
        ("1.5", 0),
        ("2, 3 4", 3),
    ],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_position(text)
    assert exc.value.offset == offset


def test_brute_force_oracle_agrees_on_worked_counts():
    # anchors the independent oracle itself before other suites lean on it
    assert brute_force_count((2, 1)) == 2
    assert brute_force_count((2, 2, 1)) == 5
