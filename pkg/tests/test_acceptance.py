"""Acceptance sweep: every identity the package promises, at full desk-scale
bounds, all exact. Run with `pytest -s tests/test_acceptance.py` to see one
PASS line per criterion (timings included); any failure shows the usual
pytest assertion detail instead.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

import pytest

from helpers import all_positions
from stanley_solitaire.counting import MemoCache, count_plays, enumerate_plays
from stanley_solitaire.formulas import (
    catalan,
    count_syt_bruteforce,
    is_231_avoiding,
    iter_all_partitions,
    yfm,
)
from stanley_solitaire.guess import Template, default_grid, fit_template
from stanley_solitaire.positions import legal_moves
from stanley_solitaire.verify import (
    verify_fact3,
    verify_recurrences,
    verify_rearrange,
    verify_staircase,
    verify_witness,
    verify_yfm,
)

# one memo per key space for the whole run: positions and permutations are
# both plain int tuples, so play counts and word counts must not share a map
CACHE = MemoCache()
WORD_CACHE = MemoCache()


@pytest.fixture(autouse=True)
def announce(request):
    started = time.perf_counter()
    yield
    elapsed = time.perf_counter() - started
    name = request.node.name.removeprefix("test_")
    report = getattr(request.node, "rep_call", None)
    status = "PASS" if report is not None and report.passed else "FAIL"
    print(f"\n{status} {name} ({elapsed:.2f}s)", end="")


def test_01_worked_examples():
    assert count_plays((2, 1), CACHE) == 2
    assert count_plays((2, 2, 1), CACHE) == 5
    assert enumerate_plays((2, 2, 1), 100, CACHE) == [
        ((2, 2, 1), (2, 1, 1), (1, 1, 1), (1, 1), (1,), ()),
        ((2, 2, 1), (2, 1, 1), (2, 1), (1, 1), (1,), ()),
        ((2, 2, 1), (2, 1, 1), (2, 1), (2,), (1,), ()),
        ((2, 2, 1), (2, 2), (2, 0, 1), (1, 1), (1,), ()),
        ((2, 2, 1), (2, 2), (2, 0, 1), (2,), (1,), ()),
    ]


def test_02_published_move_list():
    assert legal_moves((4, 5, 0, 0, 2, 0, 3, 1)) == [
        (2, (4, 0, 4, 0, 2, 0, 3, 1)),
        (5, (4, 5, 0, 0, 0, 1, 3, 1)),
        (7, (4, 5, 0, 0, 2, 0, 1, 2)),
        (8, (4, 5, 0, 0, 2, 0, 3)),
    ]


def test_03_product_formula_sweep_sum_12():
    report = verify_yfm(max_sum=12, cache=CACHE)
    assert report.cases == 271
    assert report.ok, report.mismatches


def test_04_three_pile_formula_sweep_sum_12():
    report = verify_fact3(max_sum=12, cache=CACHE)
    assert report.ok, report.mismatches
    from stanley_solitaire.formulas import fact_three_piles

    assert fact_three_piles(b=1, c=1, a=1) == 1
    assert fact_three_piles(b=1, c=1, a=2) == 3
    assert fact_three_piles(b=2, c=1, a=3) == 26


def test_05_rearrangement_invariance_sum_10():
    # the non-avoiding witness diverges, as published
    from stanley_solitaire.formulas import arrange

    assert arrange((3, 2, 1), (2, 3, 1)) == (2, 1, 3)
    assert count_plays((2, 1, 3), CACHE) == 26
    assert yfm((3, 2, 1)) == 16
    # the avoiding-pattern sweep, exactly as promised. This FAILS, and the
    # failure is genuine: the claimed invariance is false. Smallest witness:
    # [2,1,2] (the tied partition [2,2,1] under the avoiding pattern 1,3,2)
    # has 11 plays, verified by brute force, where the formula says 5. Even
    # all-distinct parts break: [4,1,2,3] has 1293 plays, formula says 768.
    report = verify_rearrange(max_sum=10, max_len=4, cache=CACHE)
    assert report.ok, (
        f"{len(report.mismatches)} of {report.cases} cases refute the "
        f"claimed invariance, e.g. {report.mismatches[0]}"
    )


def test_06_staircase_reduced_words_to_n7():
    report = verify_staircase(max_n=7, cache=WORD_CACHE)
    assert report.ok, report.mismatches
    assert yfm((3, 2, 1)) == 16
    assert yfm((4, 3, 2, 1)) == 768
    assert yfm((5, 4, 3, 2, 1)) == 292864


def test_07_witness_property_to_a1_6():
    report = verify_witness(max_first_part=6, cache=WORD_CACHE)
    assert report.cases == 63
    assert report.ok, report.mismatches


def test_08_tableaux_oracle_sum_10():
    for shape in iter_all_partitions(10):
        assert count_syt_bruteforce(shape) == yfm(shape), shape


def test_09_forced_recurrences_to_8():
    report = verify_recurrences(max_a1=8, cache=CACHE)
    assert report.cases == 84
    assert report.ok, report.mismatches


def test_10_enumeration_matches_dp_sum_8():
    for p in all_positions(8, 4):
        assert len(enumerate_plays(p, 10_000, CACHE)) == count_plays(p, CACHE), p


def test_11_guess_rediscovers_two_pile_form():
    template = Template(0, "x>=y")
    form = fit_template(
        template, default_grid(template, 10), (0, 3), 3, 10, cache=CACHE
    )
    assert form is not None
    assert (form.p, form.q) == (1, 0)
    assert sorted(form.coeffs) == [
        (0, 0, Fraction(1)),
        (0, 1, Fraction(-1)),
        (1, 0, Fraction(1)),
    ]


def test_12_avoider_census_to_k7():
    for k in range(1, 8):
        avoiders = sum(
            1
            for pi in itertools.permutations(range(1, k + 1))
            if is_231_avoiding(pi)
        )
        assert avoiders == catalan(k), k
