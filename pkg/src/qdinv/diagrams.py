"""Subdiagrams (rational Dyck paths) of the gap diagram.

A subdiagram is an upward-closed subset of the gap poset. Geometrically that
is a Young diagram justified to the south-west corner of G, so it is stored
by its row lengths from the bottom row up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from qdinv.semigroup import Cell, GapDiagram, gap_diagram


class DiagramShapeError(ValueError):
    """Row lengths that do not describe a subdiagram of G."""


@dataclass(frozen=True)
class Subdiagram:
    parent: GapDiagram
    rows: tuple[int, ...]

    @property
    def params(self):
        return self.parent.params

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            Cell(x, y) for y, n in enumerate(self.rows, start=1) for x in range(1, n + 1)
        )

    @cached_property
    def values(self) -> tuple[int, ...]:
        return tuple(sorted(self.parent.value(c) for c in self.cells))

    def __len__(self) -> int:
        return sum(self.rows)

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __contains__(self, c) -> bool:
        x, y = c
        return 1 <= y <= len(self.rows) and 1 <= x <= self.rows[y - 1]

    def __iter__(self) -> Iterator[Cell]:
        for y, n in enumerate(self.rows, start=1):
            for x in range(1, n + 1):
                yield Cell(x, y)

    def row_length(self, y: int) -> int:
        return self.rows[y - 1] if 1 <= y <= len(self.rows) else 0

    def column_height(self, x: int) -> int:
        if x < 1:
            return 0
        h = 0
        for n in self.rows:
            if n < x:
                break
            h += 1
        return h

    def issubset(self, other: "Subdiagram") -> bool:
        if len(self.rows) > len(other.rows):
            return False
        return all(p <= q for p, q in zip(self.rows, other.rows))

    def union(self, other: "Subdiagram") -> "Subdiagram":
        n = max(len(self.rows), len(other.rows))
        rows = tuple(max(self.row_length(y), other.row_length(y)) for y in range(1, n + 1))
        return Subdiagram(self.parent, rows)

    def min_cell(self) -> Cell:
        """The cell of smallest value."""
        if not self.rows:
            raise ValueError("empty subdiagram has no minimal cell")
        return min(self.cells, key=self.parent.value)

    def top_cell(self, x: int) -> Cell:
        h = self.column_height(x)
        if h == 0:
            raise ValueError(f"column {x} of the subdiagram is empty")
        return Cell(x, h)

    def to_json(self) -> dict:
        return {"a": self.parent.a, "b": self.parent.b, "rows": list(self.rows)}


def make_subdiagram(G: GapDiagram, row_lengths: Iterable[int]) -> Subdiagram:
    rows = [int(n) for n in row_lengths]
    while rows and rows[-1] == 0:
        rows.pop()
    if len(rows) > G.height:
        raise DiagramShapeError(
            f"{len(rows)} rows given but G(<{G.a},{G.b}>) has only {G.height}"
        )
    for y, n in enumerate(rows, start=1):
        if n < 0:
            raise DiagramShapeError(f"row {y} has negative length {n}")
        if n > G.rows[y - 1]:
            raise DiagramShapeError(
                f"row {y} has length {n} but row {y} of G has length {G.rows[y - 1]}"
            )
        if y > 1 and n > rows[y - 2]:
            raise DiagramShapeError(
                f"rows {y - 1} and {y}: lengths {rows[y - 2]} < {n} are not weakly decreasing"
            )
    return Subdiagram(G, tuple(rows))


def subdiagram_from_values(G: GapDiagram, values: Iterable[int]) -> Subdiagram:
    """Build a subdiagram from a set of gap values, checking it is upward closed."""
    cells = {G.cell(v) for v in values}
    for c in cells:
        for d in G.cells:
            if d not in cells and G.params.in_semigroup(G.value(d) - G.value(c)):
                raise DiagramShapeError(
                    f"value set is not upward closed: contains {G.value(c)} but not {G.value(d)}"
                )
    rows = [sum(1 for c in cells if c.y == y) for y in range(1, G.height + 1)]
    D = make_subdiagram(G, rows)
    assert D.cells == cells
    return D


def is_upward_closed(G: GapDiagram, cells: Iterable[Cell]) -> bool:
    """Upward closure in the gap poset, decided by semigroup membership only."""
    cells = set(cells)
    return all(
        d in cells
        for c in cells
        for d in G.cells
        if G.params.in_semigroup(G.value(d) - G.value(c))
    )


def enumerate_subdiagrams(G: GapDiagram) -> Iterator[Subdiagram]:
    """Every subdiagram of G once, in lexicographic order of row-length tuples."""
    profile = G.rows

    def descend(prefix: tuple[int, ...]) -> Iterator[Subdiagram]:
        yield Subdiagram(G, prefix)
        k = len(prefix)
        if k == len(profile):
            return
        top = profile[k] if k == 0 else min(prefix[-1], profile[k])
        for n in range(1, top + 1):
            yield from descend(prefix + (n,))

    return descend(())


def boundary_window(G: GapDiagram) -> range:
    """Columns of the ambient grid on which the boundary set is materialized."""
    return range(1, G.b)


def upper_boundary(D: Subdiagram) -> tuple[Cell, ...]:
    """The cell just above the top of D in each column ``1..b-1``.

    Columns east of ``b-1`` carry boundary cells of negative value, which no
    arrow from a cell of G can reach.
    """
    return tuple(Cell(x, D.column_height(x) + 1) for x in boundary_window(D.parent))


def in_boundary(D: Subdiagram, c: Cell) -> bool:
    x, y = c
    return x >= 1 and y == D.column_height(x) + 1


def arm(D: Subdiagram, c: Cell) -> int:
    if c not in D:
        raise ValueError(f"cell {tuple(c)} is not in the subdiagram")
    return D.rows[c[1] - 1] - c[0]


def leg(D: Subdiagram, c: Cell) -> int:
    if c not in D:
        raise ValueError(f"cell {tuple(c)} is not in the subdiagram")
    return D.column_height(c[0]) - c[1]


def full(G: GapDiagram) -> Subdiagram:
    return Subdiagram(G, G.rows)


def max_hook(G: GapDiagram) -> Subdiagram:
    return Subdiagram(G, (G.rows[0],) + (1,) * (G.height - 1))


def parse_subdiagram(obj: dict, G: GapDiagram | None = None) -> Subdiagram:
    """Read ``{"a":..,"b":..,"rows":[..]}`` and/or ``{"values":[..]}``.

    When both ``rows`` and ``values`` are present they must describe the same
    cells.
    """
    if G is None:
        try:
            G = gap_diagram(obj["a"], obj["b"])
        except KeyError as e:
            raise DiagramShapeError(f"diagram is missing {e.args[0]!r}") from None
    elif ("a" in obj and obj["a"] != G.a) or ("b" in obj and obj["b"] != G.b):
        raise DiagramShapeError(
            f"diagram is for <{obj.get('a')},{obj.get('b')}>, expected <{G.a},{G.b}>"
        )
    by_rows = make_subdiagram(G, obj["rows"]) if "rows" in obj else None
    by_values = subdiagram_from_values(G, obj["values"]) if "values" in obj else None
    if by_rows is None and by_values is None:
        raise DiagramShapeError("diagram needs 'rows' or 'values'")
    if by_rows is not None and by_values is not None and by_rows != by_values:
        raise DiagramShapeError(
            f"rows {list(by_rows.rows)} and values {sorted(obj['values'])} disagree"
        )
    return by_rows if by_rows is not None else by_values
