import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qdinv import (
    B,
    GVector,
    Q,
    cone_contains,
    cross_dinv,
    decompose,
    dinv,
    effective_bound_check,
    enumerate_subdiagrams,
    gap_diagram,
    make_subdiagram,
    nested_to_vector,
    truncation_radius,
    vector_to_nested,
)
from qdinv.cone import NotInCone, random_cone_vector
from qdinv.diagrams import full, subdiagram_from_values

from oracles import in_semigroup

SMALL = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (4, 7)]


def in_cone_oracle(G, n):
    gaps = G.gap_values
    return all(n[v] >= 0 for v in gaps) and all(
        n[j] >= n[i] for i in gaps for j in gaps if in_semigroup(G.a, G.b, j - i)
    )


def test_indicators_and_zero_are_in_cone():
    G = gap_diagram(4, 7)
    assert cone_contains(G, GVector.zero(G))
    for D in enumerate_subdiagrams(G):
        assert cone_contains(G, GVector.indicator(D))


def test_witness():
    G = gap_diagram(3, 5)
    res = cone_contains(G, GVector(G, {1: 1}))
    assert not res and res.violation == (1, 4)
    assert 7 - 1 == 6 and in_semigroup(3, 5, 6)
    assert cone_contains(G, GVector(G, {7: -1})).negative == 7


@given(
    st.sampled_from(SMALL).flatmap(
        lambda ab: st.tuples(
            st.just(ab),
            st.dictionaries(
                st.sampled_from(gap_diagram(*ab).gap_values), st.integers(-1, 3)
            ),
        )
    )
)
def test_membership_against_oracle(args):
    ab, entries = args
    G = gap_diagram(*ab)
    n = GVector(G, entries)
    assert bool(cone_contains(G, n)) == in_cone_oracle(G, n)


def test_decompose_examples():
    G = gap_diagram(3, 5)
    D = make_subdiagram(G, [2, 1])
    dec = decompose(GVector.indicator(D))
    assert dec.weights == (1,) and dec.layers == (D,)
    dec = decompose(3 * GVector.indicator(full(G)))
    assert dec.weights == (3,) and dec.layers == (full(G),)
    n = GVector(G, {7: 2, 4: 1, 2: 1, 1: 0})
    dec = decompose(n)
    assert dec.weights == (1, 1)
    assert [L.values for L in dec.layers] == [(2, 4, 7), (7,)]
    assert dec.reconstruct(G) == n


def test_decompose_rejects_non_cone():
    G = gap_diagram(3, 5)
    with pytest.raises(NotInCone):
        decompose(GVector(G, {1: 1}))


def test_nested_vector_roundtrip_examples():
    G = gap_diagram(3, 5)
    D = make_subdiagram(G, [2, 1])
    assert nested_to_vector([D]) == GVector.indicator(D)
    assert vector_to_nested(GVector.indicator(D)) == [D]
    assert nested_to_vector([], G) == GVector.zero(G)
    assert vector_to_nested(GVector.zero(G)) == []
    fam = [subdiagram_from_values(G, [7]), subdiagram_from_values(G, [7, 4])]
    n = nested_to_vector(fam)
    assert n == GVector(G, {7: 2, 4: 1})
    assert vector_to_nested(n) == fam


def test_nested_rejections():
    G = gap_diagram(3, 5)
    with pytest.raises(ValueError):
        nested_to_vector([full(G), make_subdiagram(G, [1])])
    with pytest.raises(NotInCone):
        vector_to_nested(GVector(G, {7: Fraction(1, 2)}))


@pytest.mark.parametrize("a,b", [(3, 5), (4, 5)])
def test_integer_vectors_roundtrip(a, b):
    G = gap_diagram(a, b)
    rng = random.Random(1)
    pool = list(enumerate_subdiagrams(G))
    for _ in range(100):
        fam = sorted(rng.sample(pool * 3, rng.randint(0, 4)), key=len)
        acc = []
        for D in fam:
            acc.append(D if not acc else acc[-1].union(D))
        n = nested_to_vector(acc, G)
        assert vector_to_nested(n, len(acc)) == acc


def test_bound_examples():
    G = gap_diagram(3, 5)
    res = effective_bound_check(GVector.zero(G))
    assert (res.Q, res.bound, res.ok) == (0, 0, True)
    res = effective_bound_check(GVector.indicator(full(G)))
    assert res.Q == dinv(full(G)) == 4 and res.bound == Fraction(1, 4) and res.ok


def test_truncation_radius():
    G = gap_diagram(3, 5)
    assert truncation_radius(G, 0) == 0
    assert truncation_radius(G, 4) == 4
    assert truncation_radius(G, 5) == 4
    with pytest.raises(ValueError):
        truncation_radius(G, -1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32))
def test_random_cone_vectors(ab, seed):
    G = gap_diagram(*ab)
    rng = random.Random(seed)
    n, m = random_cone_vector(G, rng), random_cone_vector(G, rng)
    assert cone_contains(G, n) and in_cone_oracle(G, n)
    dec = decompose(n)
    assert dec.reconstruct(G) == n
    assert len(dec.layers) <= G.genus
    for k in range(len(dec.layers) - 1):
        assert dec.layers[k + 1].issubset(dec.layers[k]) and dec.layers[k + 1] != dec.layers[k]
    assert Q(n) >= sum(w * w for w in dec.weights)
    corner = G.cell(G.params.frobenius)
    assert n.max_norm() == sum(dec.weights) == n[G.value(corner)]
    res = effective_bound_check(n)
    assert res.ok and G.genus * res.Q >= n.max_norm() ** 2
    # expand B through both decompositions
    dm = decompose(m)
    expanded = sum(
        (lam * mu * cross_dinv(D, E)
         for lam, D in zip(dec.weights, dec.layers)
         for mu, E in zip(dm.weights, dm.layers)),
        Fraction(0),
    )
    assert B(n, m) == expanded >= 0
