"""The cone of nonnegative vectors on G that increase along the gap poset.

Every such vector is a positive combination of indicator vectors of a
nested chain of subdiagrams; ``decompose`` computes the canonical one.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from qdinv.diagrams import Subdiagram, enumerate_subdiagrams, subdiagram_from_values
from qdinv.forms import GVector, Q
from qdinv.semigroup import GapDiagram
from qdinv.statistics import check_nested


class NotInCone(ValueError):
    pass


@dataclass(frozen=True)
class ConeCheck:
    ok: bool
    negative: Optional[int] = None
    violation: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.negative is not None:
            return f"coordinate at gap {self.negative} is negative"
        if self.violation is not None:
            i, j = self.violation
            return f"{j} - {i} lies in the semigroup but n[{j}] < n[{i}]"
        return "in cone"


def cone_contains(G: GapDiagram, n: GVector) -> ConeCheck:
    """Membership test; a failure carries a negative coordinate or a violating pair."""
    if n.parent != G:
        raise ValueError("vector is indexed by a different gap diagram")
    gaps = G.gap_values
    for v in gaps:
        if n[v] < 0:
            return ConeCheck(False, negative=v)
    in_s = G.params.in_semigroup
    for i in gaps:
        for j in gaps:
            if i < j and in_s(j - i) and n[j] < n[i]:
                return ConeCheck(False, violation=(i, j))
    return ConeCheck(True)


@dataclass(frozen=True)
class Decomposition:
    weights: tuple[Fraction, ...]
    layers: tuple[Subdiagram, ...]

    def reconstruct(self, G: GapDiagram) -> GVector:
        out = GVector.zero(G)
        for lam, D in zip(self.weights, self.layers):
            out = out + lam * GVector.indicator(D)
        return out


def decompose(n: GVector) -> Decomposition:
    """Write n as sum of lambda_k * 1_{D_k} with D_k = {n >= c_k} over its distinct nonzero values c_k."""
    G = n.parent
    check = cone_contains(G, n)
    if not check:
        raise NotInCone(check.describe())
    levels = sorted(set(n.entries.values()))
    weights, layers = [], []
    prev = Fraction(0)
    for c in levels:
        weights.append(c - prev)
        layers.append(subdiagram_from_values(G, [v for v, x in n.entries.items() if x >= c]))
        prev = c
    assert len(layers) <= G.genus
    return Decomposition(tuple(weights), tuple(layers))


def nested_to_vector(family: Sequence[Subdiagram], G: Optional[GapDiagram] = None) -> GVector:
    """Sum of the indicators of an ascending chain D_1 <= ... <= D_n."""
    check_nested(family)
    if not family:
        if G is None:
            raise ValueError("empty family needs the gap diagram")
        return GVector.zero(G)
    G = family[0].parent
    counts: dict[int, int] = {}
    for D in family:
        for v in D.values:
            counts[v] = counts.get(v, 0) + 1
    return GVector(G, counts)


def vector_to_nested(n: GVector, length: Optional[int] = None) -> list[Subdiagram]:
    """Inverse of ``nested_to_vector``: layer k (ascending) is {g : n_g >= length - k + 1}."""
    G = n.parent
    if any(x.denominator != 1 for x in n.entries.values()):
        raise NotInCone("vector has non-integer entries")
    check = cone_contains(G, n)
    if not check:
        raise NotInCone(check.describe())
    top = int(n.max_norm())
    length = top if length is None else length
    if length < top:
        raise ValueError(f"chain length {length} is shorter than the max entry {top}")
    descending = [
        subdiagram_from_values(G, [v for v, x in n.entries.items() if x >= k])
        for k in range(1, length + 1)
    ]
    return descending[::-1]


@dataclass(frozen=True)
class BoundCheck:
    Q: Fraction
    bound: Fraction
    ok: bool


def effective_bound_check(n: GVector) -> BoundCheck:
    """Compare Q(n) with max|n|^2 / |G|, exactly."""
    G = n.parent
    check = cone_contains(G, n)
    if not check:
        raise NotInCone(check.describe())
    q = Q(n)
    bound = n.max_norm() ** 2 / G.genus
    return BoundCheck(q, bound, q >= bound)


def truncation_radius(G: GapDiagram, N: int) -> int:
    """floor(sqrt(N |G|)): integer cone vectors with Q(n) <= N have max entry at most this."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    return math.isqrt(N * G.genus)


def random_cone_vector(
    G: GapDiagram,
    rng: random.Random,
    subdiagrams: Optional[Sequence[Subdiagram]] = None,
    max_num: int = 9,
    max_den: int = 9,
) -> GVector:
    """A random rational cone vector built from a random nested chain.

    ``k <= |G|`` subdiagrams are drawn uniformly; their running unions form an
    ascending chain, and each layer gets a random positive rational weight.
    """
    pool = list(enumerate_subdiagrams(G)) if subdiagrams is None else subdiagrams
    k = rng.randint(0, G.genus)
    out = GVector.zero(G)
    acc = Subdiagram(G, ())
    for _ in range(k):
        acc = acc.union(rng.choice(pool))
        w = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        out = out + w * GVector.indicator(acc)
    return out
