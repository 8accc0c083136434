"""Generating data over subdiagrams and over integer cone vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from qdinv.cone import truncation_radius
from qdinv.diagrams import enumerate_subdiagrams
from qdinv.forms import kernel_eval
from qdinv.semigroup import GapDiagram
from qdinv.statistics import dinv

DEFAULT_PATH_CAP = 10**6
DEFAULT_VECTOR_CAP = 10**7


class CapExceeded(RuntimeError):
    pass


class SparsePolynomial:
    """Integer polynomial in one variable stored as {exponent: coefficient}."""

    def __init__(self, coeffs: Mapping[int, int] = ()):
        clean = {}
        for e, c in dict(coeffs).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                clean[int(e)] = int(c)
        self.coeffs = dict(sorted(clean.items()))

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(out)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*t^{e}" for e, c in self.coeffs.items()) or "0"
        return f"SparsePolynomial({terms})"

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def __call__(self, t):
        return sum(c * t**e for e, c in self.coeffs.items())


def catalan_count(G: GapDiagram) -> int:
    """binom(a+b, a) / (a+b)."""
    a, b = G.a, G.b
    q, r = divmod(math.comb(a + b, a), a + b)
    assert r == 0
    return q


def dinv_distribution(G: GapDiagram, cap: int = DEFAULT_PATH_CAP) -> SparsePolynomial:
    """sum over subdiagrams D of t^dinv(D)."""
    count = catalan_count(G)
    if count > cap:
        raise CapExceeded(f"G(<{G.a},{G.b}>) has {count} subdiagrams, above the cap of {cap}")
    counts: dict[int, int] = {}
    for D in enumerate_subdiagrams(G):
        d = dinv(D)
        counts[d] = counts.get(d, 0) + 1
    return SparsePolynomial(counts)


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coefficients: tuple[int, ...]
    radius_used: int
    vectors: int
    partial: bool = True

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": list(self.coefficients),
            "radius": self.radius_used,
            "vectors": self.vectors,
            "partial": self.partial,
        }


class _Lattice:
    """All subdiagrams of G with containment and a dense integer kernel."""

    def __init__(self, G: GapDiagram):
        self.G = G
        self.diagrams = list(enumerate_subdiagrams(G))
        index = {v: k for k, v in enumerate(G.gap_values)}
        self.ind = [[index[v] for v in D.values] for D in self.diagrams]
        gaps = G.gap_values
        self.kernel = [[kernel_eval(G.params, vj - vi) for vj in gaps] for vi in gaps]
        self.below = [
            [k for k, E in enumerate(self.diagrams) if E.issubset(D) and E]
            for D in self.diagrams
        ]

    def chain_count(self, length: int) -> int:
        # descending chains D_1 >= D_2 >= ... >= D_length, each possibly empty
        ways = [1] * len(self.diagrams)
        for _ in range(length - 1):
            ways = [1 + sum(ways[k] for k in self.below[d]) for d in range(len(self.diagrams))]
        return sum(ways) if length else 1

    def q(self, n: list[int]) -> int:
        K = self.kernel
        support = [(i, x) for i, x in enumerate(n) if x]
        return sum(K[i][j] * x * y for i, x in support for j, y in support)


def integer_cone_vectors(
    G: GapDiagram, radius: int, lattice: Optional[_Lattice] = None
) -> Iterator[list[int]]:
    """Integer cone vectors with max entry <= radius, indexed by sorted gap value.

    Each vector n corresponds to exactly one descending chain of length
    ``radius`` via D_k = {n >= k}, so no deduplication is needed.
    """
    L = lattice or _Lattice(G)
    size = G.genus

    def walk(depth: int, top: Optional[int], n: list[int]) -> Iterator[list[int]]:
        yield n
        if depth == radius:
            return
        choices = range(len(L.diagrams)) if top is None else L.below[top]
        for d in choices:
            if not L.diagrams[d]:
                continue
            m = list(n)
            for i in L.ind[d]:
                m[i] += 1
            yield from walk(depth + 1, d, m)

    return walk(0, None, [0] * size)


def z_partial_sum(
    G: GapDiagram,
    N: int,
    radius: Optional[int] = None,
    cap: int = DEFAULT_VECTOR_CAP,
    path_cap: int = DEFAULT_PATH_CAP,
) -> TruncatedSeries:
    """Coefficients of z^0..z^N in sum_n z^Q(n) over integer cone vectors, without corrections."""
    R = truncation_radius(G, N) if radius is None else radius
    if R < 0:
        raise ValueError("radius must be nonnegative")
    paths = catalan_count(G)
    if paths > path_cap:
        raise CapExceeded(f"G(<{G.a},{G.b}>) has {paths} subdiagrams, above the cap of {path_cap}")
    L = _Lattice(G)
    total = L.chain_count(R)
    if total > cap:
        raise CapExceeded(
            f"{total} integer cone vectors with max entry <= {R}, above the cap of {cap}"
        )
    coeffs = [0] * (N + 1)
    seen = 0
    for n in integer_cone_vectors(G, R, L):
        seen += 1
        q = L.q(n)
        if q <= N:
            coeffs[q] += 1
    assert seen == total
    return TruncatedSeries(N, tuple(coeffs), R, seen)
