"""Exhaustive checks of the identities relating Q, the deficit formulas, dinv and the bijections.

Each ``check_*`` function returns a :class:`CheckResult`: how many cases
were examined and the first failing case, if any.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from qdinv.bijections import verify_bijection
from qdinv.cone import decompose, random_cone_vector
from qdinv.diagrams import Subdiagram, enumerate_subdiagrams, is_upward_closed, upper_boundary
from qdinv.forms import GVector, B, B_polar, B_raw, Q, deficit_B_raw, deficit_Q
from qdinv.semigroup import Cell, GapDiagram, arrow, proj_row
from qdinv.statistics import classify_cells, cross_dinv_half, dinv


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: Optional[dict] = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, case: Callable[[], dict]) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = case()

    def to_json(self) -> dict:
        out = {"cases": self.cases, "failures": self.failures, "ok": self.ok}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        out.update(self.notes)
        return out


def _rows(D: Subdiagram) -> list[int]:
    return list(D.rows)


def check_dinv_identity(G: GapDiagram, diagrams: Optional[list] = None) -> CheckResult:
    """Q(1_D) = deficit_Q(D) = dinv(D) and Q(1_D) >= 1 for nonempty D."""
    res = CheckResult("Q(1_D) = dinv(D)")
    for D in diagrams or enumerate_subdiagrams(G):
        q, d, k = Q(GVector.indicator(D)), deficit_Q(D), dinv(D)
        ok = q == d == k and (q >= 1 if D else q == 0)
        res.record(ok, lambda: {"D": _rows(D), "Q": str(q), "deficit": d, "dinv": k})
    return res


def check_shape_characterizations(G: GapDiagram, diagrams: Optional[list] = None) -> CheckResult:
    """Young-shape subdiagrams are exactly the upward-closed subsets of the gap poset."""
    res = CheckResult("upward closed = Young shape")
    young = {frozenset(D.cells) for D in diagrams or enumerate_subdiagrams(G)}
    if G.genus <= 16:
        cells = list(G.cells)
        closed = set()
        for mask in range(1 << len(cells)):
            s = frozenset(c for k, c in enumerate(cells) if mask >> k & 1)
            if is_upward_closed(G, s):
                closed.add(s)
        res.record(closed == young, lambda: {"upward_closed": len(closed), "young": len(young)})
    else:
        for s in young:
            res.record(is_upward_closed(G, s), lambda: {"cells": sorted(map(tuple, s))})
    return res


def check_bilinear_identity(
    G: GapDiagram, diagrams: Optional[list] = None, max_pairs: Optional[int] = None
) -> CheckResult:
    """2 B(1_D, 1_E) = dinv^E_D + dinv^D_E by the double sum, the deficit path and polarization."""
    res = CheckResult("2B(1_D,1_E) = dinv^E_D + dinv^D_E")
    Ds = diagrams or list(enumerate_subdiagrams(G))
    pairs = itertools.product(Ds, Ds)
    if max_pairs is not None:
        pairs = itertools.islice(pairs, max_pairs)
    for D, E in pairs:
        n, m = GVector.indicator(D), GVector.indicator(E)
        rhs = cross_dinv_half(D, E) + cross_dinv_half(E, D)
        two_b = 2 * B(n, m)
        deficit = deficit_B_raw(D, E) + deficit_B_raw(E, D)
        ok = (
            two_b == rhs == deficit
            and 2 * B_polar(n, m) == rhs
            and deficit_B_raw(D, E) == B_raw(n, m)
        )
        res.record(
            ok,
            lambda: {
                "D": _rows(D),
                "E": _rows(E),
                "2B": str(two_b),
                "deficit": deficit,
                "dinv_sum": rhs,
            },
        )
    return res


def check_single_bijections(G: GapDiagram, diagrams: Optional[list] = None) -> CheckResult:
    """Blue and red boundary arrows of D biject onto the blue and red cells; min D is neither."""
    res = CheckResult("single-diagram bijections")
    row1 = 0
    loops = 0
    for D in diagrams or enumerate_subdiagrams(G):
        r = verify_bijection(D)
        cls = classify_cells(D)
        ok = (
            r.inverse_ok
            and r.blue.predicted == cls.blue
            and r.red.predicted == cls.red
            and r.self_loops == 0
        )
        if D:
            d = D.min_cell()
            ok = ok and d in cls.contributing
        row1 += r.row1_antiproj_matches
        loops += r.self_loops
        res.record(ok, lambda: {"D": _rows(D), "blue": r.blue.to_json(G.params), "red": r.red.to_json(G.params)})
    res.notes["blue_arrows_matching_row1_antiproj"] = row1
    return res


def check_mixed_bijections(
    G: GapDiagram, diagrams: Optional[list] = None, max_pairs: Optional[int] = None
) -> CheckResult:
    """For each ordered pair (D, E), N(D, U_E) maps onto D_b and D_r, and the counts add up."""
    res = CheckResult("mixed bijections")
    Ds = diagrams or list(enumerate_subdiagrams(G))
    pairs = itertools.product(Ds, Ds)
    if max_pairs is not None:
        pairs = itertools.islice(pairs, max_pairs)
    loops = 0
    for D, E in pairs:
        rd, re = verify_bijection(D, E), verify_bijection(E, D)
        loops += rd.self_loops
        d_b, d_r = len(rd.blue.predicted), len(rd.red.predicted)
        e_b, e_r = len(re.blue.predicted), len(re.red.predicted)
        ok = (
            rd.inverse_ok
            and re.inverse_ok
            and d_b + e_r == len(E) - cross_dinv_half(D, E)
            and d_r + e_b == len(D) - cross_dinv_half(E, D)
            and rd.blue.predicted <= (D.cells & E.cells)
            and (D.cells - E.cells) <= frozenset(rd.red.forward.values())
        )
        res.record(
            ok,
            lambda: {
                "D": _rows(D),
                "E": _rows(E),
                "D_blue": rd.blue.to_json(G.params),
                "D_red": rd.red.to_json(G.params),
            },
        )
    res.notes["self_loops"] = loops
    return res


def _in_boundary_literal(D: Subdiagram, c: Cell) -> bool:
    # the boundary above D together with the strip x >= 1, y <= 0, excluding the strip itself
    x, y = c
    below = (x, y - 1)
    return c not in D and y >= 1 and (below in D or (x >= 1 and y - 1 <= 0))


def window(G: GapDiagram) -> Iterable[Cell]:
    return (Cell(x, y) for y in range(-1, G.a + 2) for x in range(-1, G.b + 2))


def check_boundary_identity(G: GapDiagram, diagrams: Optional[list] = None) -> CheckResult:
    """[j in D] - [j+b in D] = [j in B] - [j in U_D] on a window, and one bottom-row target per cell.

    Also checks the materialized boundary against the literal definition and
    that no arrow from G reaches a boundary cell east of column b-1.
    """
    res = CheckResult("boundary reduction")
    params = G.params
    for D in diagrams or enumerate_subdiagrams(G):
        U = set(upper_boundary(D))
        for j in window(G):
            south = Cell(j.x, j.y - 1)
            in_b = j.x >= 1 and j.y == 1
            in_u = _in_boundary_literal(D, j)
            ok = (j in D) - (south in D) == in_b - in_u
            if 1 <= j.x < G.b:
                ok = ok and (j in U) == in_u
            elif in_u:
                ok = ok and not any(arrow(params, i, j) for i in G.cells)
            res.record(ok, lambda: {"D": _rows(D), "j": list(j)})
        for i in D:
            hits = [Cell(x, 1) for x in range(1, G.b + 2) if arrow(params, i, Cell(x, 1))]
            res.record(
                hits == [proj_row(params, i, 1)],
                lambda: {"D": _rows(D), "i": list(i), "bottom_targets": [list(h) for h in hits]},
            )
        res.record(not (D.cells & U), lambda: {"D": _rows(D), "overlap": True})
    return res


def check_effective_bound(
    G: GapDiagram, samples: int = 1000, seed: int = 0, diagrams: Optional[list] = None
) -> CheckResult:
    """Random cone-vector pairs: B(n, n') >= 0, |G| Q(n) >= max|n|^2, exact decompositions."""
    res = CheckResult("effective positivity")
    rng = random.Random(seed)
    pool = diagrams or list(enumerate_subdiagrams(G))
    for _ in range(samples):
        n = random_cone_vector(G, rng, pool)
        m = random_cone_vector(G, rng, pool)
        dec = decompose(n)
        q = Q(n)
        sq = sum(w * w for w in dec.weights)
        ok = (
            B(n, m) >= 0
            and G.genus * q >= n.max_norm() ** 2
            and dec.reconstruct(G) == n
            and len(dec.layers) <= G.genus
            and all(D for D in dec.layers)
            and all(dec.layers[k + 1].issubset(dec.layers[k]) for k in range(len(dec.layers) - 1))
            and q >= sq
            and sum(dec.weights) == n.max_norm()
        )
        res.record(ok, lambda: {"n": n.to_json(), "m": m.to_json(), "Q": str(q)})
    return res


def run_verify(
    a: int,
    b: int,
    pairwise: bool = False,
    max_pairs: Optional[int] = None,
    samples: int = 0,
    seed: int = 0,
) -> dict:
    from qdinv.semigroup import gap_diagram

    G = gap_diagram(a, b)
    Ds = list(enumerate_subdiagrams(G))
    checks = [
        check_shape_characterizations(G, Ds),
        check_dinv_identity(G, Ds),
        check_boundary_identity(G, Ds),
        check_single_bijections(G, Ds),
    ]
    if pairwise:
        checks.append(check_bilinear_identity(G, Ds, max_pairs))
        checks.append(check_mixed_bijections(G, Ds, max_pairs))
    if samples:
        checks.append(check_effective_bound(G, samples, seed, Ds))
    return {
        "a": a,
        "b": b,
        "genus": G.genus,
        "subdiagrams": len(Ds),
        "checks": {c.name: c.to_json() for c in checks},
        "ok": all(c.ok for c in checks),
    }
