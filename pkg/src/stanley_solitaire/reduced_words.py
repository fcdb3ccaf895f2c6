"""Reduced decompositions of permutations, and the witness construction
that ties the solitaire count to them.

A reduced word for w is a shortest product of adjacent transpositions
s_i = (i, i+1) equal to w; its length is the inversion count. Counting
uses the descent recursion R(w) = sum over descents i of R(w s_i),
memoized over one-line notation.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .counting import MemoCache
from .positions import _parse_int_list

Permutation = tuple[int, ...]


def check_permutation(values: Iterable[int]) -> Permutation:
    """Validate one-line notation: each of 1..n appears exactly once."""
    w = tuple(values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {list(w)}")
    return w


def parse_permutation(text: str) -> Permutation:
    return check_permutation(_parse_int_list(text, "permutation"))


def format_permutation(w: Permutation) -> str:
    return ",".join(str(v) for v in w)


def longest_permutation(n: int) -> Permutation:
    """[n, n-1, ..., 1], the unique permutation with all n(n-1)/2 inversions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(range(n, 0, -1))


def inversions(w: Permutation) -> int:
    return sum(
        1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j]
    )


def _swap(w: Permutation, i: int) -> Permutation:
    """Right multiplication by s_{i+1}: swap positions i and i+1 (0-based)."""
    return w[:i] + (w[i + 1], w[i]) + w[i + 2 :]


_shared_cache = MemoCache()


def count_reduced_words(w: Iterable[int], cache: MemoCache | None = None) -> int:
    """Number of reduced words for w.

    R(identity) = 1; otherwise sum R(w s_i) over descents w_i > w_{i+1}
    (each swap removes one inversion). The memo spans the weak-order
    interval below w, bounded by n!, so stay at n <= 8 for sweeps.
    """
    if cache is None:
        cache = _shared_cache
    start = check_permutation(w)

    def rec(v: Permutation) -> int:
        cached = cache.get(v)
        if cached is not None:
            return cached
        descents = [i for i in range(len(v) - 1) if v[i] > v[i + 1]]
        value = sum(rec(_swap(v, i)) for i in descents) if descents else 1
        cache.put(v, value)
        return value

    return rec(start)


def count_reduced_words_bruteforce(w: Iterable[int], max_n: int = 4) -> int:
    """Independent check: try every word of length inversions(w) over the
    generators s_1..s_{n-1} and count those that multiply out to w.
    Exponential, hence the small-n cap.
    """
    start = check_permutation(w)
    n = len(start)
    if n > max_n:
        raise ValueError(f"brute-force word search is capped at n = {max_n}")
    length = inversions(start)
    identity = tuple(range(1, n + 1))
    count = 0
    for word in itertools.product(range(n - 1), repeat=length):
        v = identity
        for i in word:
            v = _swap(v, i)
        if v == start:
            count += 1
    return count


def stanley_witness(a: Iterable[int]) -> Permutation:
    """The permutation of {1..a_1+1} whose reduced words are counted by the
    product formula of the strictly decreasing partition a:

        [a_1+1, ..., a_k+1,  1..a_k,  a_k+2..a_{k-1},  ...,  a_2+2..a_1]

    (runs may be empty). Only defined for strict decrease a_1 > ... > a_k >= 1.
    """
    parts = tuple(a)
    if not parts:
        raise ValueError("partition must have at least one part")
    for i, part in enumerate(parts):
        if part < 1:
            raise ValueError(f"parts must be positive, got {part}")
        if i and parts[i - 1] <= part:
            raise ValueError(
                f"witness construction needs strict decrease, got {list(parts)}"
            )
    values = [part + 1 for part in parts]
    values.extend(range(1, parts[-1] + 1))
    for j in range(len(parts) - 1, 0, -1):
        values.extend(range(parts[j] + 2, parts[j - 1] + 1))
    return check_permutation(values)
