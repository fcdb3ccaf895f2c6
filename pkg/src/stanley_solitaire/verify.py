"""Verification sweeps: closed forms against the DP over desk-scale bounds.

Each sweep replays one of the exact identities (product formula, three-pile
formula, 231-avoiding rearrangement, witness permutation, staircase,
forced recurrences) case by case and reports every mismatch with both
values, so a failing sweep names its counterexamples.

A sweep's optional cache memoizes whichever counter it drives: play counts
for yfm/fact3/rearrange/recurrences, reduced-word counts for witness and
staircase. Positions and permutations are both int tuples, so never hand
the two kinds of sweep one shared cache.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .counting import MemoCache, count_plays
from .formulas import (
    fact_three_piles,
    is_231_avoiding,
    iter_all_partitions,
    yfm,
)
from .positions import normalize
from .reduced_words import count_reduced_words, longest_permutation, stanley_witness


@dataclass(frozen=True)
class Mismatch:
    case: str
    expected: int
    actual: int

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


@dataclass
class VerificationReport:
    sweep: str
    bounds: dict[str, int]
    cases: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, case: str, expected: int, actual: int) -> None:
        self.cases += 1
        if expected != actual:
            self.mismatches.append(Mismatch(case, expected, actual))

    def to_dict(self) -> dict:
        return {
            "sweep": self.sweep,
            "bounds": self.bounds,
            "cases": self.cases,
            "mismatches": len(self.mismatches),
            "witnesses": [m.to_dict() for m in self.mismatches],
        }

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (
            f"verify {self.sweep}: {self.cases} cases, "
            f"{len(self.mismatches)} mismatches [{status}]"
        )


def verify_yfm(max_sum: int = 12, cache: MemoCache | None = None) -> VerificationReport:
    """Product formula equals the DP on every partition with sum <= max_sum."""
    report = VerificationReport("yfm", {"max_sum": max_sum})
    for a in iter_all_partitions(max_sum):
        report.check(f"partition {list(a)}", count_plays(a, cache), yfm(a))
    return report


def verify_fact3(max_sum: int = 12, cache: MemoCache | None = None) -> VerificationReport:
    """Three-pile formula equals the DP on [b,c,a] for a >= b >= c >= 1."""
    report = VerificationReport("fact3", {"max_sum": max_sum})
    for a in range(1, max_sum - 1):
        for b in range(1, a + 1):
            for c in range(1, b + 1):
                if a + b + c > max_sum:
                    continue
                report.check(
                    f"[b,c,a] = [{b},{c},{a}]",
                    count_plays((b, c, a), cache),
                    fact_three_piles(b=b, c=c, a=a),
                )
    return report


def verify_rearrange(
    max_sum: int = 10, max_len: int = 4, cache: MemoCache | None = None
) -> VerificationReport:
    """Rearranging a partition by any 231-avoiding pattern keeps the count
    at the product-formula value."""
    report = VerificationReport("rearrange", {"max_sum": max_sum, "max_len": max_len})
    avoiders: dict[int, list[tuple[int, ...]]] = {}
    for a in iter_all_partitions(max_sum):
        k = len(a)
        if k > max_len:
            continue
        if k not in avoiders:
            avoiders[k] = [
                pi
                for pi in itertools.permutations(range(1, k + 1))
                if is_231_avoiding(pi)
            ]
        expected = yfm(a)
        for pi in avoiders[k]:
            start = normalize(a[p - 1] for p in pi)
            report.check(
                f"partition {list(a)} by pattern {list(pi)}",
                expected,
                count_plays(start, cache),
            )
    return report


def verify_witness(
    max_first_part: int = 6, cache: MemoCache | None = None
) -> VerificationReport:
    """Reduced words of the witness permutation match the product formula,
    for every strictly decreasing partition with a_1 <= max_first_part."""
    report = VerificationReport("witness", {"max_first_part": max_first_part})
    for r in range(1, max_first_part + 1):
        for parts in itertools.combinations(range(max_first_part, 0, -1), r):
            w = stanley_witness(parts)
            report.check(
                f"partition {list(parts)} (witness {list(w)})",
                yfm(parts),
                count_reduced_words(w, cache),
            )
    return report


def verify_staircase(max_n: int = 7, cache: MemoCache | None = None) -> VerificationReport:
    """Reduced words of [n,...,1] match the product formula of the
    staircase partition [n-1,...,1]."""
    report = VerificationReport("staircase", {"max_n": max_n})
    for n in range(1, max_n + 1):
        staircase = tuple(range(n - 1, 0, -1))
        report.check(
            f"n = {n}",
            yfm(staircase),
            count_reduced_words(longest_permutation(n), cache),
        )
    return report


def verify_recurrences(max_a1: int = 8, cache: MemoCache | None = None) -> VerificationReport:
    """The forced two-pile recurrences, checked where their moves are legal:

      S([a1,a2])   = S([a2,a1-1]) + S([a1,0,a2-1])    for a1 > a2 >= 1
      S([a2,a1])   = S([a2,0,a1-1])                   for a2 < a1
      S([a1,0,a2]) = S([a1-1,a2]) + S([a1,0,0,a2-1])  for a1 > a2 >= 1

    The first needs a1 > a2 (at a1 = a2 the swap move is illegal and the
    identity fails, e.g. S([1,1]) = 1 but the right side gives 2).
    """
    report = VerificationReport("recurrences", {"max_a1": max_a1})

    def s(raw: tuple[int, ...]) -> int:
        return count_plays(normalize(raw), cache)

    for a1 in range(1, max_a1 + 1):
        for a2 in range(1, a1 + 1):
            if a1 > a2:
                report.check(
                    f"S([{a1},{a2}]) = S([{a2},{a1 - 1}]) + S([{a1},0,{a2 - 1}])",
                    s((a1, a2)),
                    s((a2, a1 - 1)) + s((a1, 0, a2 - 1)),
                )
                report.check(
                    f"S([{a2},{a1}]) = S([{a2},0,{a1 - 1}])",
                    s((a2, a1)),
                    s((a2, 0, a1 - 1)),
                )
                report.check(
                    f"S([{a1},0,{a2}]) = S([{a1 - 1},{a2}]) + S([{a1},0,0,{a2 - 1}])",
                    s((a1, 0, a2)),
                    s((a1 - 1, a2)) + s((a1, 0, 0, a2 - 1)),
                )
    return report


SWEEPS = {
    "yfm": verify_yfm,
    "fact3": verify_fact3,
    "rearrange": verify_rearrange,
    "witness": verify_witness,
    "staircase": verify_staircase,
    "recurrences": verify_recurrences,
}
