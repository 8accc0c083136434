import pytest

from qdinv import (
    Cell,
    DiagramShapeError,
    arm,
    enumerate_subdiagrams,
    gap_diagram,
    leg,
    make_subdiagram,
    upper_boundary,
)
from qdinv.diagrams import (
    is_upward_closed,
    max_hook,
    parse_subdiagram,
    subdiagram_from_values,
)

from oracles import catalan, coprime_pairs, upward_closed_subsets

PAIRS = coprime_pairs(48)


def test_hook_4_7_subdiagram():
    G = gap_diagram(4, 7)
    D = make_subdiagram(G, [4, 1, 1])
    assert len(D) == 6
    assert D.values == (3, 5, 9, 10, 13, 17)


def test_empty_subdiagram():
    D = make_subdiagram(gap_diagram(3, 5), [])
    assert len(D) == 0 and not D


def test_trailing_zeros_dropped():
    G = gap_diagram(4, 7)
    assert make_subdiagram(G, [2, 1, 0]) == make_subdiagram(G, [2, 1])


@pytest.mark.parametrize(
    "rows,msg",
    [
        ([2, 2], "row 2"),
        ([0, 1], "rows 1 and 2"),
        ([4], "row 1"),
        ([1, 1, 1], "3 rows"),
        ([-1], "negative"),
    ],
)
def test_bad_shapes(rows, msg):
    with pytest.raises(DiagramShapeError, match=msg):
        make_subdiagram(gap_diagram(3, 5), rows)


def test_enumeration_small():
    assert len(list(enumerate_subdiagrams(gap_diagram(2, 3)))) == 2
    assert len(list(enumerate_subdiagrams(gap_diagram(3, 5)))) == 7
    assert len(list(enumerate_subdiagrams(gap_diagram(4, 5)))) == 14


@pytest.mark.parametrize("a,b", PAIRS)
def test_enumeration_is_lexicographic_and_complete(a, b):
    G = gap_diagram(a, b)
    Ds = list(enumerate_subdiagrams(G))
    keys = [D.rows for D in Ds]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys) == catalan(a, b)


@pytest.mark.parametrize("a,b", [(2, 3), (3, 4), (3, 5), (4, 5), (4, 7), (5, 6)])
def test_young_shapes_are_the_upward_closed_sets(a, b):
    G = gap_diagram(a, b)
    young = {frozenset(D.values) for D in enumerate_subdiagrams(G)}
    assert young == set(upward_closed_subsets(a, b))


def test_from_values_rejects_non_closed():
    G = gap_diagram(3, 5)
    with pytest.raises(DiagramShapeError, match="upward closed"):
        subdiagram_from_values(G, [1])
    assert not is_upward_closed(G, [G.cell(1)])
    assert subdiagram_from_values(G, [7, 4]).rows == (2,)


def test_parse_cross_checks_rows_and_values():
    G = gap_diagram(3, 5)
    assert parse_subdiagram({"rows": [2], "values": [4, 7]}, G).rows == (2,)
    with pytest.raises(DiagramShapeError, match="disagree"):
        parse_subdiagram({"rows": [2], "values": [7]}, G)
    with pytest.raises(DiagramShapeError):
        parse_subdiagram({"a": 4, "b": 5, "rows": [1]}, G)
    assert parse_subdiagram({"a": 3, "b": 5, "rows": [1]}).rows == (1,)


def test_hook_4_7_boundary():
    G = gap_diagram(4, 7)
    D = make_subdiagram(G, [4, 1, 1])
    U = upper_boundary(D)
    assert sorted(G.value(u) for u in U if u in G) == [1, 2, 6]
    assert [G.value(u) for u in U if u in G] == [6, 2, 1]


def test_boundary_of_empty_is_bottom_row():
    G = gap_diagram(4, 7)
    U = upper_boundary(make_subdiagram(G, []))
    assert U == tuple(Cell(x, 1) for x in range(1, 7))


def test_boundary_of_max_hook_5_7():
    # column 1 is 4 tall, columns 2..5 are 1 tall
    G = gap_diagram(5, 7)
    H = max_hook(G)
    assert H.rows == (5, 1, 1, 1)
    U = upper_boundary(H)
    assert U[:6] == (Cell(1, 5), Cell(2, 2), Cell(3, 2), Cell(4, 2), Cell(5, 2), Cell(6, 1))
    assert sorted(G.value(u) for u in U if u in G) == [1, 6, 11]


@pytest.mark.parametrize("a,b", PAIRS)
def test_boundary_one_per_column_and_disjoint(a, b):
    G = gap_diagram(a, b)
    for D in enumerate_subdiagrams(G):
        U = upper_boundary(D)
        assert [u.x for u in U] == list(range(1, b))
        assert not set(U) & D.cells


def test_arm_leg_examples():
    G = gap_diagram(5, 7)
    H = max_hook(G)
    assert (arm(H, G.cell(23)), leg(H, G.cell(23))) == (4, 3)
    assert arm(H, G.cell(3)) == 0
    G = gap_diagram(4, 7)
    D = make_subdiagram(G, [4, 1, 1])
    assert (arm(D, G.cell(13)), leg(D, G.cell(13))) == (2, 0)
    with pytest.raises(ValueError):
        arm(D, G.cell(6))


@pytest.mark.parametrize("a,b", [(3, 5), (4, 7), (5, 7)])
def test_arm_leg_by_walking(a, b):
    G = gap_diagram(a, b)
    for D in enumerate_subdiagrams(G):
        for c in D:
            k = 0
            while Cell(c.x + k + 1, c.y) in D:
                k += 1
            assert arm(D, c) == k == D.row_length(c.y) - c.x
            k = 0
            while Cell(c.x, c.y + k + 1) in D:
                k += 1
            assert leg(D, c) == k
