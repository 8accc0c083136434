"""The gap set of the numerical semigroup <a,b> as a value-labelled Young diagram.

Cells live on the integer grid with +x east and +y north. The value of a
cell is ``g(x, y) = a*b - a*x - b*y``; moving one step east lowers the value
by ``a`` and one step north lowers it by ``b``. Rows are 1-based, row 1 is
the bottom row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple


class ParameterError(ValueError):
    """Raised for an invalid pair (a, b)."""


class Cell(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class SemigroupParams:
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)):
            raise ParameterError(f"a and b must be integers, got {a!r}, {b!r}")
        if a <= 1:
            raise ParameterError(f"need a > 1, got a={a}")
        if b <= a:
            raise ParameterError(f"need b > a, got a={a}, b={b}")
        if math.gcd(a, b) != 1:
            raise ParameterError(f"a={a} and b={b} are not coprime")

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    @property
    def frobenius(self) -> int:
        return self.a * self.b - self.a - self.b

    def value(self, c: Cell) -> int:
        return self.a * self.b - self.a * c[0] - self.b * c[1]

    @cached_property
    def _apery(self) -> tuple[int, ...]:
        # smallest element of <a,b> in each residue class mod a
        a, b = self.a, self.b
        table = [0] * a
        for k in range(a):
            table[(k * b) % a] = k * b
        return tuple(table)

    def in_semigroup(self, d: int) -> bool:
        return d >= 0 and d >= self._apery[d % self.a]

    def cell_of_value(self, v: int, row: int) -> Cell:
        """The cell in ``row`` with value ``v``; raises if no such cell exists."""
        num = self.a * self.b - self.b * row - v
        if num % self.a:
            raise ValueError(f"no cell of value {v} in row {row}")
        return Cell(num // self.a, row)


def arrow(params: SemigroupParams, i: Cell, j: Cell) -> bool:
    """True iff ``i -> j``, that is ``0 <= g(j) - g(i) < a``."""
    d = params.value(j) - params.value(i)
    return 0 <= d < params.a


def proj_row(params: SemigroupParams, i: Cell, r: int) -> Cell:
    """Lowest-valued cell of row ``r`` whose value is at least ``g(i)``."""
    a, b = params.a, params.b
    x = (a * b - b * r - params.value(i)) // a
    return Cell(x, r)


def antiproj_row(params: SemigroupParams, i: Cell, r: int) -> Cell:
    """Highest-valued cell of row ``r`` whose value is at most ``g(i)``."""
    a, b = params.a, params.b
    x = -((params.value(i) - a * b + b * r) // a)
    return Cell(x, r)


@dataclass(frozen=True)
class GapDiagram:
    """The cells ``(x, y)`` with ``x, y >= 1`` and positive value.

    ``rows[r-1]`` is the length of row ``r``; ``values[r-1]`` lists the values
    of that row from west to east.
    """

    params: SemigroupParams
    rows: tuple[int, ...]
    cells: tuple[Cell, ...] = field(repr=False)
    value_index: dict[int, Cell] = field(repr=False, compare=False, hash=False)

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def genus(self) -> int:
        return len(self.cells)

    @property
    def height(self) -> int:
        return len(self.rows)

    @cached_property
    def values(self) -> tuple[tuple[int, ...], ...]:
        v = self.params.value
        return tuple(
            tuple(v(Cell(x, y)) for x in range(1, n + 1))
            for y, n in enumerate(self.rows, start=1)
        )

    @cached_property
    def gap_values(self) -> tuple[int, ...]:
        return tuple(sorted(self.value_index))

    @cached_property
    def column_heights(self) -> tuple[int, ...]:
        width = self.rows[0] if self.rows else 0
        return tuple(sum(1 for n in self.rows if n >= x) for x in range(1, width + 1))

    def value(self, c: Cell) -> int:
        return self.params.value(c)

    def __contains__(self, c) -> bool:
        x, y = c
        return 1 <= y <= len(self.rows) and 1 <= x <= self.rows[y - 1]

    def cell(self, value: int) -> Cell:
        try:
            return self.value_index[value]
        except KeyError:
            raise KeyError(f"{value} is not a gap of <{self.a},{self.b}>") from None

    def require(self, c: Cell) -> Cell:
        if c not in self:
            raise ValueError(f"cell {tuple(c)} is not in G(<{self.a},{self.b}>)")
        return Cell(*c)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "rows": list(self.rows),
            "values": [list(r) for r in self.values],
        }


def gap_diagram(a: int, b: int) -> GapDiagram:
    params = SemigroupParams(a, b)
    rows = []
    y = 1
    while True:
        # largest x with a*b - a*x - b*y > 0
        n = (a * b - b * y - 1) // a
        if n < 1:
            break
        rows.append(n)
        y += 1
    cells = tuple(Cell(x, y) for y, n in enumerate(rows, start=1) for x in range(1, n + 1))
    index = {params.value(c): c for c in cells}
    assert len(index) == len(cells) == params.genus
    return GapDiagram(params, tuple(rows), cells, index)


def poset_leq(G: GapDiagram, i: Cell, j: Cell) -> bool:
    """``i <= j`` in the gap poset, i.e. ``g(j) - g(i)`` lies in <a,b>."""
    i, j = G.require(i), G.require(j)
    return G.params.in_semigroup(G.value(j) - G.value(i))


def proj_stays_in_G(G: GapDiagram, c: Cell, r: int) -> Cell:
    """Project ``c`` onto a row ``r`` at or below it and check the result is in G."""
    c = G.require(c)
    if not 1 <= r <= c.y:
        raise ValueError(f"row {r} is not between 1 and row({c.y})")
    j = proj_row(G.params, c, r)
    assert j in G, f"proj_{r}{tuple(c)} = {tuple(j)} left G"
    return j
