"""Arrow sets N(X, Y) and the maps from boundary arrows onto blue and red cells.

Forward maps are geometric (row/column intersections, parallel shifts).
Inverses are rebuilt cell by cell from arm and leg data, and
``verify_bijection`` checks the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from qdinv.diagrams import Subdiagram, arm, in_boundary, leg, upper_boundary
from qdinv.semigroup import Cell, SemigroupParams, antiproj_row, arrow, proj_row
from qdinv.statistics import _flat, _steep

BLUE = "blue"
RED = "red"


@dataclass(frozen=True, order=True)
class Arrow:
    source: Cell
    target: Cell
    color: str = field(compare=False)


def arrow_color(i: Cell, j: Cell) -> str:
    """Blue when the target is strictly north of the source; red otherwise (including self-loops)."""
    return BLUE if j[1] > i[1] else RED


def arrow_set(params: SemigroupParams, X: Iterable[Cell], Y: Iterable[Cell]) -> list[Arrow]:
    """All i -> j with i in X and j in Y, sorted by source value then target value."""
    Y = list(Y)
    out = [
        Arrow(Cell(*i), Cell(*j), arrow_color(i, j)) for i in X for j in Y if arrow(params, i, j)
    ]
    out.sort(key=lambda w: (params.value(w.source), params.value(w.target)))
    return out


def boundary_arrow_set(D: Subdiagram, E: Optional[Subdiagram] = None) -> list[Arrow]:
    """N(D, U_E); with ``E`` omitted, N(D, U_D)."""
    E = D if E is None else E
    return arrow_set(D.params, D.cells, upper_boundary(E))


def _phi(D: Subdiagram, w: Arrow) -> Cell:
    i, j = w.source, w.target
    if w.color == BLUE:
        return Cell(j.x, i.y)
    top = D.column_height(i.x)
    # parallel shift moving i up to the top cell of D in its column
    shift = top - i.y
    return Cell(i.x, j.y + shift)


def _require_arrow(D: Subdiagram, E: Subdiagram, w: Arrow) -> Arrow:
    i, j = Cell(*w.source), Cell(*w.target)
    if i not in D or not in_boundary(E, j) or not arrow(D.params, i, j):
        raise ValueError(f"{tuple(i)} -> {tuple(j)} is not an arrow from D into U_E")
    return Arrow(i, j, arrow_color(i, j))


def phi_single(D: Subdiagram, w: Arrow) -> Cell:
    w = _require_arrow(D, D, w)
    c = _phi(D, w)
    assert c in D
    return c


def phi_mixed(D: Subdiagram, E: Subdiagram, w: Arrow) -> Cell:
    w = _require_arrow(D, E, w)
    c = _phi(D, w)
    assert c in D
    return c


def predicted_blue(D: Subdiagram, E: Subdiagram) -> frozenset:
    """Cells of D & E with (leg_E + 1)/arm_D <= a/b."""
    a, b = D.params.a, D.params.b
    return frozenset(c for c in D.cells & E.cells if _flat(a, b, leg(E, c), arm(D, c)))


def predicted_red(D: Subdiagram, E: Subdiagram) -> frozenset:
    """D minus E, together with cells of D & E where leg_D/(arm_E + 1) >= a/b."""
    a, b = D.params.a, D.params.b
    both = frozenset(c for c in D.cells & E.cells if _steep(a, b, leg(D, c), arm(E, c)))
    return (D.cells - E.cells) | both


def reconstruct_blue(D: Subdiagram, E: Subdiagram, c: Cell) -> Optional[Arrow]:
    """The only possible blue preimage of ``c``, or None if it is not a valid arrow."""
    if c not in E:
        return None
    j = Cell(c.x, c.y + leg(E, c) + 1)
    i = antiproj_row(D.params, j, c.y)
    if i not in D:
        return None
    return Arrow(i, j, BLUE)


def reconstruct_red(D: Subdiagram, E: Subdiagram, c: Cell) -> Optional[Arrow]:
    """The only possible red preimage of ``c``, or None if it is not a valid arrow."""
    params = D.params
    i_top = Cell(c.x, c.y + leg(D, c))
    j_top = proj_row(params, i_top, c.y)
    if j_top in E:
        return None
    # translate south until the target sits on the boundary of E
    drop = j_top.y - (E.column_height(j_top.x) + 1)
    if not 0 <= drop <= D.parent.height + 1:
        return None
    i = Cell(i_top.x, i_top.y - drop)
    j = Cell(j_top.x, j_top.y - drop)
    if i not in D or not in_boundary(E, j) or not arrow(params, i, j):
        return None
    if arrow_color(i, j) != RED:
        return None
    return Arrow(i, j, RED)


@dataclass
class BijectionReport:
    color: str
    domain_size: int
    image_size: int
    forward: dict = field(repr=False)
    predicted: frozenset = field(repr=False)
    missed_cells: frozenset
    extra_cells: frozenset
    injective: bool
    roundtrip_ok: bool

    @property
    def inverse_ok(self) -> bool:
        return (
            self.injective
            and not self.missed_cells
            and not self.extra_cells
            and self.roundtrip_ok
        )

    def to_json(self, params: SemigroupParams) -> dict:
        v = params.value
        return {
            "color": self.color,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "inverse_ok": self.inverse_ok,
            "missed_cells": sorted(v(c) for c in self.missed_cells),
            "extra_cells": sorted(v(c) for c in self.extra_cells),
        }


def _report(D, E, arrows, color, predicted, reconstruct) -> BijectionReport:
    forward = {w: _phi(D, w) for w in arrows if w.color == color}
    image = frozenset(forward.values())
    # every arrow is recovered from its image, and a preimage exists exactly on the predicted set
    roundtrip = all(reconstruct(D, E, c) == w for w, c in forward.items())
    roundtrip = roundtrip and all(
        (reconstruct(D, E, c) is not None) == (c in predicted) for c in D
    )
    return BijectionReport(
        color=color,
        domain_size=len(forward),
        image_size=len(image),
        forward=forward,
        predicted=predicted,
        missed_cells=predicted - image,
        extra_cells=image - predicted,
        injective=len(image) == len(forward),
        roundtrip_ok=roundtrip,
    )


@dataclass
class VerifyResult:
    """Reports for the blue and red restrictions of the map on N(D, U_E)."""

    blue: BijectionReport
    red: BijectionReport
    self_loops: int
    row1_antiproj_matches: int

    @property
    def inverse_ok(self) -> bool:
        return self.blue.inverse_ok and self.red.inverse_ok


def verify_bijection(D: Subdiagram, E: Optional[Subdiagram] = None) -> VerifyResult:
    """Check that N(D, U_E) maps bijectively onto the predicted blue and red cells of D.

    With ``E`` omitted this is the single-diagram case, where the predicted
    sets are the blue and red cells of D. ``row1_antiproj_matches`` counts
    blue arrows whose source also equals the antiprojection of the target
    onto row 1.
    """
    E = D if E is None else E
    if D.parent != E.parent:
        raise ValueError("subdiagrams belong to different gap diagrams")
    arrows = boundary_arrow_set(D, E)
    blue = _report(D, E, arrows, BLUE, predicted_blue(D, E), reconstruct_blue)
    red = _report(D, E, arrows, RED, predicted_red(D, E), reconstruct_red)
    loops = sum(1 for w in arrows if w.source == w.target)
    row1 = sum(
        1 for w in blue.forward if antiproj_row(D.params, w.target, 1) == w.source
    )
    return VerifyResult(blue, red, loops, row1)
