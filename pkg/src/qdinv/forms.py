"""The kernel K, the quadratic form Q and its bilinear forms on R^G.

The double sums over G x G are the reference evaluations. ``deficit_Q`` and
``deficit_B_raw`` evaluate indicator vectors through arrows into the upper
boundary instead.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from qdinv.diagrams import Subdiagram, upper_boundary
from qdinv.semigroup import Cell, GapDiagram, SemigroupParams, antiproj_row


class GVector:
    """A vector in R^G keyed by gap value; absent keys read as 0."""

    __slots__ = ("parent", "entries")

    def __init__(self, parent: GapDiagram, entries: Mapping[int, object] = ()):
        self.parent = parent
        clean = {}
        for v, x in dict(entries).items():
            if v not in parent.value_index:
                raise KeyError(f"{v} is not a gap of <{parent.a},{parent.b}>")
            x = Fraction(x)
            if x:
                clean[v] = x
        self.entries = clean

    @classmethod
    def indicator(cls, D: Subdiagram) -> "GVector":
        return cls(D.parent, {v: 1 for v in D.values})

    @classmethod
    def zero(cls, parent: GapDiagram) -> "GVector":
        return cls(parent)

    def __getitem__(self, v: int) -> Fraction:
        return self.entries.get(v, Fraction(0))

    def _check(self, other: "GVector") -> None:
        if self.parent != other.parent:
            raise ValueError(
                f"vectors over <{self.parent.a},{self.parent.b}> and "
                f"<{other.parent.a},{other.parent.b}> cannot be combined"
            )

    def __add__(self, other: "GVector") -> "GVector":
        self._check(other)
        out = dict(self.entries)
        for v, x in other.entries.items():
            out[v] = out.get(v, 0) + x
        return GVector(self.parent, out)

    def __mul__(self, k) -> "GVector":
        k = Fraction(k)
        return GVector(self.parent, {v: k * x for v, x in self.entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GVector):
            return NotImplemented
        return self.parent == other.parent and self.entries == other.entries

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {x}" for v, x in sorted(self.entries.items()))
        return f"GVector(<{self.parent.a},{self.parent.b}>, {{{body}}})"

    def max_norm(self) -> Fraction:
        return max((abs(x) for x in self.entries.values()), default=Fraction(0))

    def to_json(self) -> dict:
        return {str(v): _fmt(x) for v, x in sorted(self.entries.items())}


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def kernel_eval(params: SemigroupParams, d: int) -> int:
    """K(d) = [d>=0] - [d>=a] - [d>=b] + [d>=a+b]."""
    a, b = params.a, params.b
    return (d >= 0) - (d >= a) - (d >= b) + (d >= a + b)


def kernel_windows(params: SemigroupParams, d: int) -> int:
    """The same kernel written as [0 <= d < a] - [b <= d < a+b]."""
    a, b = params.a, params.b
    return (0 <= d < a) - (b <= d < a + b)


def Q(n: GVector) -> Fraction:
    K = n.parent.params
    items = list(n.entries.items())
    return sum(
        (kernel_eval(K, vj - vi) * xi * xj for vi, xi in items for vj, xj in items),
        Fraction(0),
    )


def B_raw(n: GVector, m: GVector) -> Fraction:
    """The asymmetric form sum_{i,j} ([0<=g(j)-g(i)<a] - [b<=g(j)-g(i)<a+b]) n_i m_j."""
    n._check(m)
    K = n.parent.params
    return sum(
        (
            kernel_windows(K, vj - vi) * xi * yj
            for vi, xi in n.entries.items()
            for vj, yj in m.entries.items()
        ),
        Fraction(0),
    )


def B(n: GVector, m: GVector) -> Fraction:
    return (B_raw(n, m) + B_raw(m, n)) / 2


def B_polar(n: GVector, m: GVector) -> Fraction:
    """The symmetric form by polarization, (Q(n+m) - Q(n) - Q(m)) / 2."""
    return (Q(n + m) - Q(n) - Q(m)) / 2


def boundary_arrows(D: Subdiagram, targets: Iterable[Cell]) -> list[tuple[Cell, Cell]]:
    """Pairs (i, u) with i in D, u in ``targets`` and i -> u.

    For each target and each row of D there is at most one candidate source,
    the antiprojection of the target onto that row.
    """
    params = D.params
    out = []
    for u in targets:
        for r in range(1, len(D.rows) + 1):
            i = antiproj_row(params, u, r)
            if i in D:
                out.append((i, u))
    return out


def deficit_B_raw(D: Subdiagram, E: Subdiagram) -> int:
    """B'(1_D, 1_E) as |D| minus the number of arrows from D into the boundary of E."""
    if D.parent != E.parent:
        raise ValueError("subdiagrams belong to different gap diagrams")
    return len(D) - len(boundary_arrows(D, upper_boundary(E)))


def deficit_Q(D: Subdiagram) -> int:
    return deficit_B_raw(D, D)
