"""Independent oracles for the test suite.

Nothing here imports the package. The brute-force counter mirrors the two
published move cases directly (interior swap, then the end move), with its
own zero trimming, so it cannot share a bug with the engine's unified
single-rule implementation.
"""

from __future__ import annotations

import itertools


def trim(seq) -> tuple[int, ...]:
    items = list(seq)
    while items and items[0] == 0:
        items.pop(0)
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


def bf_children(p: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Interior swaps where left > right, then the unconditional end move."""
    kids = []
    k = len(p)
    for i in range(k - 1):
        if p[i] > p[i + 1]:
            kids.append(trim(p[:i] + (p[i + 1], p[i] - 1) + p[i + 2 :]))
    if k:
        kids.append(trim(p[: k - 1] + (0, p[k - 1] - 1)))
    return kids


def brute_force_count(p) -> int:
    p = trim(p)
    if not p:
        return 1
    return sum(brute_force_count(c) for c in bf_children(p))


def brute_force_plays(p) -> list[tuple[tuple[int, ...], ...]]:
    p = trim(p)
    if not p:
        return [((),)]
    return [(p,) + rest for c in bf_children(p) for rest in brute_force_plays(c)]


def reachable_positions(p) -> set[tuple[int, ...]]:
    start = trim(p)
    seen = {start}
    frontier = [start]
    while frontier:
        pos = frontier.pop()
        for child in bf_children(pos):
            if child not in seen:
                seen.add(child)
                frontier.append(child)
    return seen


def all_positions(max_sum: int, max_len: int):
    """Every normalized position (interior zeros allowed) with
    1 <= sum <= max_sum and 1 <= length <= max_len."""
    for length in range(1, max_len + 1):
        for piles in itertools.product(range(max_sum + 1), repeat=length):
            if 0 < sum(piles) <= max_sum and piles[0] > 0 and piles[-1] > 0:
                yield piles


def is_valid_play(play, start) -> bool:
    """Structural play check: starts at `start`, ends empty, each step is
    one legal move, length = candy total + 1."""
    if not play or play[0] != trim(start) or play[-1] != ():
        return False
    if len(play) != sum(start) + 1:
        return False
    return all(
        nxt in bf_children(cur) for cur, nxt in zip(play, play[1:])
    )
