"""Board positions and legal moves for Stanley solitaire.

A position is a row of candy piles written left to right. One move: pick
adjacent piles where the left pile is strictly larger than the right one
(an implicit empty pile sits just beyond the right end), swap the two
piles, and eat one candy from the swapped larger pile. Positions are kept
normalized: no leading or trailing empty piles, so the finished game is
the empty position ``()``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Position = tuple[int, ...]
Move = int  # 1-based pile index of the left pile of the swapped pair


class ParseError(ValueError):
    """Malformed position/partition/permutation text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class IllegalMoveError(ValueError):
    """Move index out of range, or the left pile is not strictly larger."""

    def __init__(self, index: int, position: Position):
        super().__init__(
            f"move {index} is illegal in position {format_position(position)}"
        )
        self.index = index
        self.position = position


def normalize(raw: Iterable[int]) -> Position:
    """Drop leading and trailing empty piles; interior zeros stay put.

    >>> normalize([4, 5, 0, 0, 2, 0, 3, 0, 0])
    (4, 5, 0, 0, 2, 0, 3)
    >>> normalize([0, 0, 0])
    ()
    """
    piles = tuple(raw)
    for a in piles:
        if a < 0:
            raise ValueError(f"pile sizes must be non-negative, got {a}")
    lo = 0
    hi = len(piles)
    while lo < hi and piles[lo] == 0:
        lo += 1
    while hi > lo and piles[hi - 1] == 0:
        hi -= 1
    return piles[lo:hi]


def total_candies(p: Sequence[int]) -> int:
    return sum(p)


def _child(p: Position, i: Move) -> Position:
    """Position after move i, not legality-checked. Treats a_{k+1} as 0."""
    k = len(p)
    if i < k:
        return normalize(p[: i - 1] + (p[i], p[i - 1] - 1) + p[i + 1 :])
    return normalize(p[: k - 1] + (0, p[k - 1] - 1))


def legal_moves(p: Position) -> list[tuple[Move, Position]]:
    """Every legal move with its normalized child, in ascending index order.

    Move i swaps piles i and i+1 (a virtual empty pile sits at k+1, so the
    last pile can always move right). Nonempty positions always have at
    least that final move; the empty position has none.
    """
    k = len(p)
    moves: list[tuple[Move, Position]] = []
    for i in range(1, k + 1):
        right = p[i] if i < k else 0
        if p[i - 1] > right:
            moves.append((i, _child(p, i)))
    return moves


def apply_move(p: Position, i: Move) -> Position:
    """Play move i on a nonempty normalized position.

    Raises IllegalMoveError when i is out of range or pile i does not
    strictly exceed pile i+1.
    """
    k = len(p)
    if not 1 <= i <= k:
        raise IllegalMoveError(i, p)
    right = p[i] if i < k else 0
    if p[i - 1] <= right:
        raise IllegalMoveError(i, p)
    return _child(p, i)


def _parse_int_list(text: str, what: str = "position") -> list[int]:
    """Shared grammar: "[]", or comma-separated decimal naturals, with
    optional surrounding brackets. Offsets in errors index into `text`.
    """
    end = len(text.rstrip())
    start = end - len(text[:end].strip())
    if start == end:
        raise ParseError(f"empty {what} text", start)
    body_start, body_end = start, end
    if text[start] == "[":
        if text[end - 1] != "]":
            raise ParseError("missing closing bracket", end)
        body_start, body_end = start + 1, end - 1
        if not text[body_start:body_end].strip():
            return []
    body = text[body_start:body_end]
    values: list[int] = []
    offset = body_start
    for token in body.split(","):
        stripped = token.strip()
        token_at = offset + len(token) - len(token.lstrip())
        if not stripped:
            raise ParseError("missing number", token_at)
        if not stripped.isdigit():
            raise ParseError(f"invalid number {stripped!r}", token_at)
        values.append(int(stripped))
        offset += len(token) + 1
    return values


def parse_position(text: str) -> Position:
    """Parse position text and normalize it.

    >>> parse_position("0,3,0")
    (3,)
    >>> parse_position("[]")
    ()
    """
    return normalize(_parse_int_list(text, "position"))


def format_position(p: Position) -> str:
    """Canonical bracketed form, e.g. "[2,2,1]" or "[]"."""
    return "[" + ",".join(str(a) for a in p) + "]"
