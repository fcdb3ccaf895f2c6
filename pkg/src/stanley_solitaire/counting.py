"""Exact play counting, full enumeration, and uniform random sampling.

Counting is memoized dynamic programming over normalized positions with
Python's arbitrary-precision integers, so every count is exact. The game
always terminates (each move eats one candy), hence the reachable set of
any start is finite and modest: single starts with sum 15 reach a few
hundred distinct positions ([5,4,3,2,1] reaches 601), and verification
sweeps over every partition memoize ~1.5k positions at sum <= 12 and
~6.3k at sum <= 15. Counts themselves blow up much faster than the state
space (S([10,10,10]) is already past 7.6e9), which is why the DP stores
exact big integers rather than enumerating plays.
"""

from __future__ import annotations

import random
import threading
from typing import NamedTuple

from .positions import Position, legal_moves, normalize

Play = tuple[Position, ...]


class PlayLimitExceeded(Exception):
    """Enumeration refused: the exact play count is larger than the limit."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"position has {count} plays, more than the limit {limit}")
        self.count = count
        self.limit = limit


class CacheStats(NamedTuple):
    entries: int
    hits: int
    misses: int


class MemoCache:
    """Map from position (or any tuple key) to its exact count.

    Stored values are write-once and never mutated, so concurrent callers
    may share one cache: the worst a race can do is compute the same value
    twice. With ``max_entries`` set, insertions past the cap are dropped
    and callers silently recompute; results stay exact either way.
    """

    def __init__(self, max_entries: int | None = None):
        if max_entries is not None and max_entries < 0:
            raise ValueError("max_entries must be non-negative")
        self.max_entries = max_entries
        self._map: dict[tuple, int] = {}
        self._hits = 0
        self._misses = 0
        self._lock = threading.Lock()

    def get(self, key: tuple) -> int | None:
        with self._lock:
            value = self._map.get(key)
            if value is None:
                self._misses += 1
            else:
                self._hits += 1
            return value

    def put(self, key: tuple, value: int) -> None:
        with self._lock:
            if key in self._map:
                return
            if self.max_entries is not None and len(self._map) >= self.max_entries:
                return
            self._map[key] = value

    def stats(self) -> CacheStats:
        with self._lock:
            return CacheStats(len(self._map), self._hits, self._misses)

    def clear(self) -> None:
        with self._lock:
            self._map.clear()
            self._hits = 0
            self._misses = 0

    def __len__(self) -> int:
        return len(self._map)

    def __contains__(self, key: tuple) -> bool:
        return key in self._map


def cache_stats(cache: MemoCache) -> CacheStats:
    return cache.stats()


def clear_cache(cache: MemoCache) -> None:
    cache.clear()


_shared_cache = MemoCache()


def count_plays(p: Position, cache: MemoCache | None = None) -> int:
    """Exact number of complete plays from p.

    S(()) = 1 and S(p) = sum of S(child) over the legal moves of p.
    Iterative post-order traversal, so deep games cannot hit the
    interpreter recursion limit.
    """
    if cache is None:
        cache = _shared_cache
    p = normalize(p)
    # Everything resolved this call lands in `local`; the shared cache is
    # consulted once per first encounter and fed subject to its cap.
    local: dict[Position, int] = {}
    stack: list[tuple[Position, bool]] = [(p, False)]
    while stack:
        pos, expanded = stack.pop()
        if pos in local:
            continue
        if expanded:
            value = sum(local[child] for _, child in legal_moves(pos))
            local[pos] = value
            cache.put(pos, value)
            continue
        cached = cache.get(pos)
        if cached is not None:
            local[pos] = cached
            continue
        if not pos:
            local[pos] = 1
            cache.put(pos, 1)
            continue
        stack.append((pos, True))
        for _, child in legal_moves(pos):
            if child not in local:
                stack.append((child, False))
    return local[p]


def enumerate_plays(p: Position, limit: int, cache: MemoCache | None = None) -> list[Play]:
    """All complete plays from p, depth-first, moves in ascending index order.

    A play is the full position sequence from p down to (). Refuses up
    front (PlayLimitExceeded, carrying the exact count) when there are
    more than `limit` plays.
    """
    if limit <= 0:
        raise ValueError("limit must be positive")
    p = normalize(p)
    count = count_plays(p, cache)
    if count > limit:
        raise PlayLimitExceeded(count, limit)

    plays: list[Play] = []
    prefix: list[Position] = [p]

    def walk(pos: Position) -> None:
        if not pos:
            plays.append(tuple(prefix))
            return
        for _, child in legal_moves(pos):
            prefix.append(child)
            walk(child)
            prefix.pop()

    walk(p)
    return plays


def sample_play(p: Position, rng: random.Random, cache: MemoCache | None = None) -> Play:
    """One complete play drawn uniformly among all S(p) plays.

    Each move is taken with probability S(child)/S(current); the counts
    are exact integers, so the draw is exactly uniform (no floats).
    """
    pos = normalize(p)
    play = [pos]
    while pos:
        options = legal_moves(pos)
        weights = [count_plays(child, cache) for _, child in options]
        r = rng.randrange(sum(weights))
        for (_, child), weight in zip(options, weights):
            if r < weight:
                pos = child
                break
            r -= weight
        play.append(pos)
    return tuple(play)


__all__ = [
    "Play",
    "PlayLimitExceeded",
    "CacheStats",
    "MemoCache",
    "cache_stats",
    "clear_cache",
    "count_plays",
    "enumerate_plays",
    "sample_play",
]
