from itertools import permutations
from math import factorial

import pytest

from hollowgh.exactpoly import SparsePoly
from hollowgh.latticediag import HollowGamma, delta
from hollowgh.tableaux import ResourceCapError


def test_parse_and_render():
    g = HollowGamma.parse("1,2:3,4:5,6")
    assert (g.m1, g.m2, g.k1, g.k2, g.p1, g.p2) == (1, 2, 3, 4, 5, 6)
    assert g.render() == "1,2:3,4:5,6"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("1,1:1,1", "three"),
        ("1:1,1:0,0", "group 1"),
        ("1,1:1,x:0,0", "k2"),
        ("1,1:1,1:0,0,0", "group 3"),
    ],
)
def test_parse_errors_name_position(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        HollowGamma.parse(text)


@pytest.mark.parametrize(
    "kwargs,fragment",
    [
        (dict(m1=0, m2=1, k1=1, k2=1, p1=0, p2=0), "m1"),
        (dict(m1=1, m2=1, k1=0, k2=1, p1=0, p2=0), "k1"),
        (dict(m1=1, m2=1, k1=1, k2=1, p1=-1, p2=0), "p1"),
    ],
)
def test_parameter_bounds(kwargs, fragment):
    with pytest.raises(ValueError, match=fragment):
        HollowGamma(**kwargs)


def test_hollow_cells_examples():
    assert HollowGamma.parse("1,1:1,1:0,0").cells() == ((0, 1), (0, 0), (1, 0))
    assert HollowGamma.parse("1,1:2,1:1,0").cells() == (
        (0, 1),
        (0, 0),
        (2, 0),
        (3, 0),
    )
    assert len(HollowGamma.parse("4,2:3,2:5,2").cells()) == 14


def test_cell_count_formula():
    for text in ("1,1:1,1:0,0", "1,1:2,1:1,0", "2,1:1,1:0,0", "1,2:1,2:0,1", "4,2:3,2:5,2"):
        g = HollowGamma.parse(text)
        assert len(g.cells()) == g.n == g.m1 + g.p1 + g.m2 + g.p2 + 1


def test_bracket_zero_slides_is_identity():
    g = HollowGamma.parse("2,1:6,3:2,2")
    assert g.bracket_cells((0, 0, 0), (0, 0, 0)) == g.cells()
    assert g.bracket_cells((), ()) == g.cells()


def test_bracket_moves_first_detached_arm_cell():
    g = HollowGamma.parse("1,1:2,1:1,0")
    # detached arm at (2,0),(3,0); sliding the inner one left by 1 fills the gap
    assert g.bracket_cells((), (1,)) == ((0, 1), (0, 0), (1, 0), (3, 0))


def test_bracket_list_validation():
    g = HollowGamma.parse("2,1:6,3:2,2")
    with pytest.raises(ValueError, match="longer"):
        g.bracket_cells((0, 0, 0, 0), ())
    with pytest.raises(ValueError, match="nonincreasing"):
        g.bracket_cells((1, 2), ())
    with pytest.raises(ValueError, match="nonnegative"):
        g.bracket_cells((-1,), ())
    with pytest.raises(ValueError, match="below the axis"):
        g.bracket_cells((4,), ())


def test_delta_base_cases():
    assert delta([(0, 0)]) == SparsePoly.one(1)
    n = 2
    x1 = SparsePoly.variable(n, "x", 1)
    x2 = SparsePoly.variable(n, "x", 2)
    assert delta([(0, 0), (1, 0)]) == x2 - x1
    assert delta([(0, 1), (0, 0), (1, 0), (1, 0)]).is_zero()


def test_delta_term_count_and_bidegree():
    for cells in [((0, 1), (0, 0), (1, 0)), ((0, 2), (0, 0), (1, 0), (3, 0))]:
        d = delta(cells)
        assert len(d.terms) == factorial(len(cells))
        assert d.bidegree() == (
            sum(a for a, b in cells),
            sum(b for a, b in cells),
        )


def test_delta_antisymmetric_in_cells():
    cells = [(0, 2), (0, 0), (1, 0), (3, 0)]
    swapped = [cells[1], cells[0], cells[2], cells[3]]
    assert delta(swapped) == -delta(cells)


def test_delta_alternates_under_diagonal_action():
    cells = ((0, 1), (0, 0), (1, 0), (2, 0))
    d = delta(cells)
    n = len(cells)
    for sigma in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for s in range(n):
            if seen[s]:
                continue
            ln, j = 0, s
            while not seen[j]:
                seen[j] = True
                j = sigma[j]
                ln += 1
            if ln % 2 == 0:
                sign = -sign
        moved = {}
        for (xe, ye), c in d.terms.items():
            nx = [0] * n
            ny = [0] * n
            for i in range(n):
                nx[sigma[i]] = xe[i]
                ny[sigma[i]] = ye[i]
            moved[(tuple(nx), tuple(ny))] = c
        assert SparsePoly(n, moved) == d.scale(sign)


def test_delta_cap():
    with pytest.raises(ResourceCapError):
        delta([(i, 0) for i in range(8)])


def test_delta_rejects_negative_cells():
    with pytest.raises(ValueError):
        delta([(0, 0), (-1, 0)])
