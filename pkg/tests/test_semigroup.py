import pytest
from hypothesis import given, strategies as st

from qdinv import (
    Cell,
    ParameterError,
    SemigroupParams,
    antiproj_row,
    arrow,
    gap_diagram,
    poset_leq,
    proj_row,
    proj_stays_in_G,
)

from oracles import coprime_pairs, gaps, in_semigroup

PAIRS = coprime_pairs(48)


def test_gaps_3_5():
    G = gap_diagram(3, 5)
    assert G.gap_values == (1, 2, 4, 7)


def test_gap_diagram_4_5_rows_4_5():
    G = gap_diagram(4, 5)
    assert G.values == ((11, 7, 3), (6, 2), (1,))


def test_smallest_pair():
    G = gap_diagram(2, 3)
    assert G.cells == (Cell(1, 1),)
    assert G.gap_values == (1,)


@pytest.mark.parametrize("a,b", [(1, 3), (3, 3), (5, 3), (4, 6), (6, 9), (0, 1)])
def test_bad_parameters(a, b):
    with pytest.raises(ParameterError):
        gap_diagram(a, b)


@pytest.mark.parametrize("a,b", PAIRS)
def test_gap_set_matches_membership(a, b):
    G = gap_diagram(a, b)
    assert list(G.gap_values) == gaps(a, b)
    assert G.genus == (a - 1) * (b - 1) // 2 == len(set(G.value(c) for c in G.cells))
    assert all(p >= q for p, q in zip(G.rows, G.rows[1:]))


@pytest.mark.parametrize("a,b", PAIRS)
def test_in_semigroup_against_brute_force(a, b):
    p = SemigroupParams(a, b)
    for d in range(-a - b, 3 * a * b):
        assert p.in_semigroup(d) == in_semigroup(a, b, d), d


def test_poset_examples():
    G = gap_diagram(3, 5)
    c = G.cell
    assert poset_leq(G, c(1), c(4))
    assert not poset_leq(G, c(1), c(2))
    assert all(poset_leq(G, x, x) for x in G.cells)


def test_poset_rejects_outside_cells():
    G = gap_diagram(3, 5)
    with pytest.raises(ValueError):
        poset_leq(G, Cell(0, 1), G.cell(1))


@pytest.mark.parametrize("a,b", [(3, 5), (4, 5), (4, 7), (5, 7), (3, 8)])
def test_poset_is_partial_order(a, b):
    G = gap_diagram(a, b)
    cells = G.cells
    leq = {(i, j): poset_leq(G, i, j) for i in cells for j in cells}
    for i in cells:
        assert leq[i, i]
        for j in cells:
            if i != j and leq[i, j]:
                assert not leq[j, i]
            for k in cells:
                if leq[i, j] and leq[j, k]:
                    assert leq[i, k]


def test_arrow_examples():
    G = gap_diagram(4, 5)
    p = G.params
    c = G.cell
    assert arrow(p, c(1), c(2))
    assert arrow(p, c(1), c(1))
    assert not arrow(p, c(3), c(2))


def test_gap_diagram_4_5_projections():
    G = gap_diagram(4, 5)
    p = G.params
    c = G.cell
    assert G.value(proj_row(p, c(1), 2)) == 2
    assert G.value(proj_row(p, c(1), 1)) == 3
    assert G.value(proj_row(p, c(3), 2)) == 6
    j = proj_row(p, c(7), 2)
    assert G.value(j) == 10 and j not in G
    assert proj_row(p, c(6), 2) == c(6)


def test_proj_stays_in_G_examples():
    G = gap_diagram(4, 5)
    assert G.value(proj_stays_in_G(G, G.cell(3), 1)) == 3
    assert G.value(proj_stays_in_G(G, G.cell(1), 2)) == 2
    G = gap_diagram(5, 7)
    j = proj_stays_in_G(G, G.cell(9), 1)
    assert j.y == 1 and j in G and G.value(j) == 13
    with pytest.raises(ValueError):
        proj_stays_in_G(G, G.cell(9), 4)


@pytest.mark.parametrize("a,b", PAIRS)
def test_projection_into_lower_rows_stays_in_G(a, b):
    G = gap_diagram(a, b)
    for c in G.cells:
        for r in range(1, c.y + 1):
            assert proj_stays_in_G(G, c, r) in G


@given(
    st.sampled_from(PAIRS),
    st.integers(-30, 30),
    st.integers(-30, 30),
    st.integers(-30, 30),
)
def test_proj_antiproj_unique_in_row(ab, x, y, r):
    p = SemigroupParams(*ab)
    i = Cell(x, y)
    j, k = proj_row(p, i, r), antiproj_row(p, i, r)
    assert j.y == r and k.y == r
    assert arrow(p, i, j) and arrow(p, k, i)
    # scan a window wider than a around the solution
    for t in range(-2 * p.b - 2, 2 * p.b + 3):
        cand = Cell(j.x + t, r)
        assert arrow(p, i, cand) == (t == 0)
        cand = Cell(k.x + t, r)
        assert arrow(p, cand, i) == (t == 0)


@given(st.sampled_from(PAIRS), *[st.integers(-20, 20)] * 4)
def test_arrows_point_northwest_or_southeast(ab, x1, y1, x2, y2):
    p = SemigroupParams(*ab)
    i, j = Cell(x1, y1), Cell(x2, y2)
    if arrow(p, i, j) and p.value(i) != p.value(j):
        dx, dy = x2 - x1, y2 - y1
        assert (dx > 0 and dy < 0) or (dx < 0 and dy > 0)


def test_json_shape():
    assert gap_diagram(4, 5).to_json() == {
        "a": 4,
        "b": 5,
        "rows": [3, 2, 1],
        "values": [[11, 7, 3], [6, 2], [1]],
    }
