"""Closed-form play counts and independent combinatorial oracles.

The centerpiece is ``yfm``: for a weakly decreasing start [a_1,...,a_k]
the number of plays is a factorial quotient times the product of
(a_i - a_j + j - i) over pairs, which is also the number of standard
Young tableaux of that shape. Everything here is exact integer
arithmetic; the divisions are asserted to leave no remainder.
"""

from __future__ import annotations

import itertools
import threading
from typing import Iterable, Iterator

from .positions import Position, _parse_int_list, normalize
from .reduced_words import check_permutation

Partition = tuple[int, ...]
PermutationPattern = tuple[int, ...]

_factorials = [1]
_factorials_lock = threading.Lock()


def factorial(n: int) -> int:
    """n! from a shared incrementally-grown table."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    if n >= len(_factorials):
        with _factorials_lock:
            while len(_factorials) <= n:
                _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence of positive integers."""
    a = tuple(parts)
    for i, part in enumerate(a):
        if part <= 0:
            raise ValueError(f"partition parts must be positive, got {part}")
        if i and a[i - 1] < part:
            raise ValueError(f"partition must be weakly decreasing, got {list(a)}")
    return a


def parse_partition(text: str) -> Partition:
    return check_partition(_parse_int_list(text, "partition"))


def iter_partitions(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of `total` in weakly decreasing order of parts."""
    if total == 0:
        yield ()
        return
    if max_part is None or max_part > total:
        max_part = total
    for first in range(max_part, 0, -1):
        for rest in iter_partitions(total - first, first):
            yield (first,) + rest


def iter_all_partitions(max_sum: int) -> Iterator[Partition]:
    """All partitions with 1 <= sum <= max_sum."""
    for total in range(1, max_sum + 1):
        yield from iter_partitions(total)


def yfm(a: Iterable[int]) -> int:
    """Exact play count for the weakly decreasing start [a_1,...,a_k]:

        (a_1+...+a_k)! / ((a_1+k-1)! (a_2+k-2)! ... a_k!)
            * prod_{i<j} (a_i - a_j + j - i)

    Valid only for partitions; general positions go through the DP.
    """
    parts = check_partition(a)
    k = len(parts)
    numerator = factorial(sum(parts))
    for i, j in itertools.combinations(range(k), 2):
        numerator *= parts[i] - parts[j] + j - i
    denominator = 1
    for i, part in enumerate(parts):
        denominator *= factorial(part + k - 1 - i)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"product formula is not integral on {list(parts)}")
    return quotient


def count_syt_bruteforce(a: Iterable[int], max_cells: int = 12) -> int:
    """Standard Young tableaux of shape `a`, by exhaustive placement.

    Backtracks over the diagram's cells in row-major order, trying every
    unused value larger than the left and upper neighbours. Exponential;
    refuses shapes with more than `max_cells` cells.
    """
    shape = check_partition(a)
    n = sum(shape)
    if n > max_cells:
        raise ValueError(
            f"shape has {n} cells; the brute-force counter is capped at {max_cells}"
        )
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    filling: dict[tuple[int, int], int] = {}
    used = [False] * (n + 1)

    def fill(index: int) -> int:
        if index == n:
            return 1
        r, c = cells[index]
        floor = filling[(r, c - 1)] if c else 0
        if r:
            floor = max(floor, filling[(r - 1, c)])
        total = 0
        for value in range(floor + 1, n + 1):
            if used[value]:
                continue
            used[value] = True
            filling[(r, c)] = value
            total += fill(index + 1)
            used[value] = False
        filling.pop((r, c), None)
        return total

    return fill(0)


# Polynomial factor of the three-pile formula, transcribed as published:
# (coefficient, (exponent of a, of b, of c)), in the published term order.
FACT3_POLY: tuple[tuple[int, tuple[int, int, int]], ...] = (
    (1, (2, 1, 0)),
    (-1, (2, 0, 1)),
    (1, (1, 2, 0)),
    (-2, (1, 1, 1)),
    (1, (1, 0, 2)),
    (-1, (0, 2, 1)),
    (1, (0, 1, 2)),
    (1, (2, 0, 0)),
    (5, (1, 1, 0)),
    (-6, (1, 0, 1)),
    (3, (0, 2, 0)),
    (-6, (0, 1, 1)),
    (3, (0, 0, 2)),
    (4, (1, 0, 0)),
    (6, (0, 1, 0)),
    (-9, (0, 0, 1)),
    (3, (0, 0, 0)),
)


def fact_three_piles(*, b: int, c: int, a: int) -> int:
    """Exact play count for the start [b, c, a] with a >= b >= c > 0:

        (a+b+c)! / ((a+3)! (b+1)! c!) * P(a,b,c) * (a - b + 2)

    with P the cubic in FACT3_POLY. Keyword-only on purpose: the largest
    pile a sits rightmost, and positional calls invite transpositions.
    """
    if not a >= b >= c >= 1:
        raise ValueError(f"requires a >= b >= c >= 1, got a={a}, b={b}, c={c}")
    poly = sum(
        coeff * a**ea * b**eb * c**ec for coeff, (ea, eb, ec) in FACT3_POLY
    )
    numerator = factorial(a + b + c) * poly * (a - b + 2)
    denominator = factorial(a + 3) * factorial(b + 1) * factorial(c)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"three-pile formula is not integral on b={b}, c={c}, a={a}"
        )
    return quotient


def is_231_avoiding(pattern: Iterable[int]) -> bool:
    """True iff no i < j < l has values ordered pi_l < pi_i < pi_j."""
    pi = check_permutation(pattern)
    k = len(pi)
    for i, j, l in itertools.combinations(range(k), 3):
        if pi[l] < pi[i] < pi[j]:
            return False
    return True


def catalan(k: int) -> int:
    """The k-th Catalan number (2k)! / (k! (k+1)!)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return factorial(2 * k) // (factorial(k) * factorial(k + 1))


def arrange(a: Iterable[int], pattern: Iterable[int]) -> Position:
    """The start position [a_{pi_1}, ..., a_{pi_k}]: the partition's parts
    rearranged by the pattern."""
    parts = check_partition(a)
    pi = check_permutation(pattern)
    if len(pi) != len(parts):
        raise ValueError(
            f"pattern length {len(pi)} does not match partition length {len(parts)}"
        )
    return normalize(parts[p - 1] for p in pi)
