"""Brute-force reference computations that share no code paths with the package."""

import math
from fractions import Fraction
from itertools import combinations


def semigroup_members(a, b, limit):
    return {x * a + y * b for x in range(limit // a + 1) for y in range(limit // b + 1)} & set(
        range(limit + 1)
    )


def gaps(a, b):
    f = a * b - a - b
    s = semigroup_members(a, b, f + 1)
    return sorted(set(range(1, f + 1)) - s)


def in_semigroup(a, b, d):
    if d < 0:
        return False
    return any((d - y * b) % a == 0 for y in range(d // b + 1))


def upward_closed_subsets(a, b):
    """All subsets S of the gap set with s in S, s <= t  =>  t in S, as frozensets of values."""
    G = gaps(a, b)
    out = []
    for k in range(len(G) + 1):
        for S in combinations(G, k):
            S = set(S)
            if all(t in S for s in S for t in G if in_semigroup(a, b, t - s)):
                out.append(frozenset(S))
    return out


def kernel(a, b, d):
    return int(d >= 0) - int(d >= a) - int(d >= b) + int(d >= a + b)


def q_values(a, b, n):
    """Q on a dict {gap value: number}."""
    return sum(kernel(a, b, j - i) * n.get(i, 0) * n.get(j, 0) for i in n for j in n)


def braw_values(a, b, n, m):
    return sum(kernel(a, b, j - i) * x * y for i, x in n.items() for j, y in m.items())


def cell_of(a, b, v):
    for y in range(1, a):
        for x in range(1, b):
            if a * b - a * x - b * y == v:
                return (x, y)
    raise KeyError(v)


def dinv_values(a, b, S):
    """dinv of a value set through arm/leg computed by walking east and north."""
    cells = {cell_of(a, b, v) for v in S}
    count = 0
    for x, y in cells:
        arm = 0
        while (x + arm + 1, y) in cells:
            arm += 1
        leg = 0
        while (x, y + leg + 1) in cells:
            leg += 1
        lo = Fraction(leg, arm + 1)
        hi = math.inf if arm == 0 else Fraction(leg + 1, arm)
        count += lo < Fraction(a, b) < hi
    return count


def catalan(a, b):
    return math.comb(a + b, a) // (a + b)


def coprime_pairs(max_product):
    return [
        (a, b)
        for a in range(2, max_product)
        for b in range(a + 1, max_product)
        if a * b <= max_product and math.gcd(a, b) == 1
    ]
