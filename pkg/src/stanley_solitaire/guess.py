"""Conjectural closed forms fitted to play-count data.

For a two-pile template like [x, 0^m, y] under an ordering constraint,
hypothesize S = (x+y)! / ((x+p)! (y+q)!) * P(x,y) with P a polynomial,
solve for P's coefficients exactly over the rationals on training data,
and keep the first hypothesis that also reproduces every held-out point.
No floating point anywhere: a fit either matches the data exactly or is
discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .counting import MemoCache, count_plays
from .formulas import factorial
from .positions import Position

_CONSTRAINTS = {
    "x>y": lambda x, y: x > y,
    "x<y": lambda x, y: x < y,
    "x>=y": lambda x, y: x >= y,
}


@dataclass(frozen=True)
class Template:
    """Two-parameter family of positions [x, 0^gap, y]."""

    gap: int = 0
    constraint: str = "x>=y"

    def __post_init__(self):
        if self.gap < 0:
            raise ValueError("gap must be non-negative")
        if self.constraint not in _CONSTRAINTS:
            raise ValueError(
                f"constraint must be one of {sorted(_CONSTRAINTS)}, got {self.constraint!r}"
            )

    def admits(self, x: int, y: int) -> bool:
        return x >= 1 and y >= 1 and _CONSTRAINTS[self.constraint](x, y)

    def instantiate(self, x: int, y: int) -> Position:
        if not self.admits(x, y):
            raise ValueError(f"({x}, {y}) violates the template constraint {self}")
        return (x,) + (0,) * self.gap + (y,)

    def __str__(self) -> str:
        middle = "0," * self.gap
        return f"[x,{middle}y] with {self.constraint}"


@dataclass(frozen=True)
class FittedForm:
    """S = (x+y)! / ((x+p)! (y+q)!) * P(x,y), with exact coefficients.

    `coeffs` lists the nonzero monomials of P as (x-exponent, y-exponent,
    coefficient), sorted by total degree then x-exponent.
    """

    template: Template
    p: int
    q: int
    coeffs: tuple[tuple[int, int, Fraction], ...]

    @property
    def degree(self) -> int:
        return max((i + j for i, j, _ in self.coeffs), default=0)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "coefficients": [
                {"x": i, "y": j, "value": str(c)} for i, j, c in self.coeffs
            ],
        }

    def poly_at(self, x: int, y: int) -> Fraction:
        return sum(
            (c * x**i * y**j for i, j, c in self.coeffs), start=Fraction(0)
        )

    def value_at(self, x: int, y: int) -> Fraction:
        return (
            Fraction(factorial(x + y), factorial(x + self.p) * factorial(y + self.q))
            * self.poly_at(x, y)
        )

    def __str__(self) -> str:
        middle = "0," * self.template.gap
        return (
            f"S([x,{middle}y]) = (x+y)!/({_offset_factorial('x', self.p)}"
            f"*{_offset_factorial('y', self.q)}) * ({_format_poly(self.coeffs)})"
        )


def _offset_factorial(var: str, offset: int) -> str:
    if offset == 0:
        return f"{var}!"
    sign = "+" if offset > 0 else "-"
    return f"({var}{sign}{abs(offset)})!"


def _format_poly(coeffs: Sequence[tuple[int, int, Fraction]]) -> str:
    if not coeffs:
        return "0"
    terms = sorted(coeffs, key=lambda t: (-(t[0] + t[1]), -t[0]))
    pieces: list[str] = []
    for i, j, c in terms:
        mono = "*".join(
            part
            for part in (
                f"x^{i}" if i > 1 else "x" if i == 1 else "",
                f"y^{j}" if j > 1 else "y" if j == 1 else "",
            )
            if part
        )
        magnitude = abs(c)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def evaluate_fitted(form: FittedForm, x: int, y: int) -> int:
    """Exact value of the fitted form; errors when it is not a natural
    number (the sign of a bad fit)."""
    if not form.template.admits(x, y):
        raise ValueError(f"({x}, {y}) violates the template constraint {form.template}")
    value = form.value_at(x, y)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(
            f"fitted form gives {value} at ({x}, {y}), not a natural number"
        )
    return int(value)


def solve_rational_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """Solve an (over)determined linear system exactly by rational Gaussian
    elimination. Returns one solution with free variables at zero, or None
    when the system is inconsistent.
    """
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    n_rows = len(m)
    n_cols = len(rows[0]) if n_rows else 0
    pivot_cols: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [v - factor * w for v, w in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if m[i][n_cols] != 0:
            return None
    solution = [Fraction(0)] * n_cols
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = m[row_idx][n_cols]
    return solution


def default_grid(template: Template, max_coord: int = 10) -> list[tuple[int, int]]:
    """All admissible (x, y) with 1 <= x, y <= max_coord, sorted."""
    return [
        (x, y)
        for x in range(1, max_coord + 1)
        for y in range(1, max_coord + 1)
        if template.admits(x, y)
    ]


def _monomials(degree: int) -> list[tuple[int, int]]:
    return [
        (i, total - i) for total in range(degree + 1) for i in range(total, -1, -1)
    ]


def fit_template(
    template: Template,
    grid: Iterable[tuple[int, int]],
    offset_range: tuple[int, int] = (0, 3),
    max_degree: int = 3,
    holdout: int = 10,
    cache: MemoCache | None = None,
) -> FittedForm | None:
    """Search for the simplest validating closed form.

    Degrees ascend, then offsets (p, q) in lexicographic order; the first
    hypothesis whose exact coefficient solve also reproduces every point
    (training and held-out alike) wins, so runs are deterministic. The
    held-out points are the `holdout` largest by (x+y, x, y). Returns None
    when nothing in the search space validates.
    """
    points = sorted(set(grid))
    for x, y in points:
        if not template.admits(x, y):
            raise ValueError(f"grid point ({x}, {y}) violates {template}")
    needed = (max_degree + 1) * (max_degree + 2) // 2 + holdout
    if holdout < 1 or len(points) < needed:
        raise ValueError(
            f"need at least {needed} grid points for degree {max_degree} "
            f"with {holdout} held out, got {len(points)}"
        )
    ordered = sorted(points, key=lambda t: (t[0] + t[1], t[0], t[1]))
    training = ordered[:-holdout]
    counts = {pt: count_plays(template.instantiate(*pt), cache) for pt in points}
    x_min = min(x for x, _ in points)
    y_min = min(y for _, y in points)

    lo, hi = offset_range
    for degree in range(max_degree + 1):
        monos = _monomials(degree)
        for p in range(lo, hi + 1):
            for q in range(lo, hi + 1):
                if x_min + p < 0 or y_min + q < 0:
                    continue
                rows = [
                    [Fraction(x**i * y**j) for i, j in monos] for x, y in training
                ]
                rhs = [
                    Fraction(
                        counts[(x, y)] * factorial(x + p) * factorial(y + q),
                        factorial(x + y),
                    )
                    for x, y in training
                ]
                solution = solve_rational_system(rows, rhs)
                if solution is None:
                    continue
                form = FittedForm(
                    template,
                    p,
                    q,
                    tuple(
                        (i, j, c)
                        for (i, j), c in zip(monos, solution)
                        if c != 0
                    ),
                )
                if all(form.value_at(x, y) == counts[(x, y)] for x, y in points):
                    return form
    return None
