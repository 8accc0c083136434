"""dinv, cross-dinv and the blue/red classification of cells.

Every slope comparison is a cross-multiplication of nonnegative integers.
An arm of 0 makes the large hook slope infinite, which the cross-multiplied
form ``a*arm < b*(leg+1)`` already handles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qdinv.diagrams import Subdiagram, arm, leg


def _check_strict(a: int, b: int, lg: int, am: int) -> None:
    # coprimality forbids a/b landing exactly on a hook slope inside G
    assert b * lg != a * (am + 1) and b * (lg + 1) != a * am, (a, b, lg, am)


def _straddles(a: int, b: int, lg: int, am: int) -> bool:
    """leg/(arm+1) < a/b < (leg+1)/arm."""
    _check_strict(a, b, lg, am)
    return b * lg < a * (am + 1) and a * am < b * (lg + 1)


def _flat(a: int, b: int, lg: int, am: int) -> bool:
    """(leg+1)/arm <= a/b."""
    return b * (lg + 1) <= a * am


def _steep(a: int, b: int, lg: int, am: int) -> bool:
    """leg/(arm+1) >= a/b."""
    return b * lg >= a * (am + 1)


def _same_parent(D: Subdiagram, E: Subdiagram) -> None:
    if D.parent != E.parent:
        raise ValueError("subdiagrams belong to different gap diagrams")


@dataclass(frozen=True)
class CellClassification:
    blue: frozenset
    red: frozenset
    contributing: frozenset


def dinv(D: Subdiagram) -> int:
    a, b = D.params.a, D.params.b
    return sum(_straddles(a, b, leg(D, c), arm(D, c)) for c in D)


def classify_cells(D: Subdiagram) -> CellClassification:
    a, b = D.params.a, D.params.b
    blue, red, good = set(), set(), set()
    for c in D:
        lg, am = leg(D, c), arm(D, c)
        if _flat(a, b, lg, am):
            blue.add(c)
        elif _steep(a, b, lg, am):
            red.add(c)
        else:
            good.add(c)
    return CellClassification(frozenset(blue), frozenset(red), frozenset(good))


def cross_dinv_half(D: Subdiagram, E: Subdiagram) -> int:
    """Cells of D & E whose mixed slopes leg_E/(arm_D+1), (leg_E+1)/arm_D straddle a/b."""
    _same_parent(D, E)
    a, b = D.params.a, D.params.b
    return sum(_straddles(a, b, leg(E, c), arm(D, c)) for c in D.cells & E.cells)


def double_cross_dinv(D: Subdiagram, E: Subdiagram) -> int:
    return cross_dinv_half(D, E) + cross_dinv_half(E, D)


def cross_dinv(D: Subdiagram, E: Subdiagram) -> Fraction:
    return Fraction(double_cross_dinv(D, E), 2)


def check_nested(family: Sequence[Subdiagram]) -> None:
    for k in range(1, len(family)):
        _same_parent(family[k - 1], family[k])
        if not family[k - 1].issubset(family[k]):
            raise ValueError(
                f"family is not nested: layer {k} {list(family[k - 1].rows)} "
                f"is not contained in layer {k + 1} {list(family[k].rows)}"
            )


def nested_dinv(family: Sequence[Subdiagram]) -> Fraction:
    """High-rank dinv of an ascending chain: the sum of cross-dinv over all ordered pairs."""
    check_nested(family)
    total = sum(double_cross_dinv(D, E) for D in family for E in family)
    return Fraction(total, 2)
