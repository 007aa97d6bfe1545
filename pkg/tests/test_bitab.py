import random
from itertools import permutations, product

import pytest

from hollowgh.bitab import (
    standard_unit,
    build,
    ephi_of,
    per_applied_to_delta,
    per_operator_on_delta_direct,
    straighten,
)
from hollowgh.exactpoly import SparsePoly
from hollowgh.latticediag import HollowGamma
from hollowgh.tableaux import (
    Filling,
    axis_cell,
    cocharge_diagram,
    column_strict_fillings,
    compare_bitableaux,
    enumerate_syt,
    partitions_of,
)


def test_build_det_example():
    s = Filling.parse("2,1;3")
    u = Filling.parse("-1,1;2", axis=True)
    n = 3
    x1 = SparsePoly.variable(n, "x", 1)
    x2 = SparsePoly.variable(n, "x", 2)
    x3 = SparsePoly.variable(n, "x", 3)
    y2 = SparsePoly.variable(n, "y", 2)
    y3 = SparsePoly.variable(n, "y", 3)
    assert build("det", s, u).value == x1 * y2 * x3 * x3 - x1 * y3 * x2 * x2


def test_build_single_cell():
    s = Filling(((1,),))
    u = Filling((((2, 3),),))
    assert build("per", s, u).value == SparsePoly.from_monomial(1, ((2,), (3,)))
    assert build("det", s, u).value == SparsePoly.from_monomial(1, ((2,), (3,)))


def test_build_requires_full_label_set():
    s = Filling(((2, 3),))
    u = Filling((((0, 0), (1, 0)),))
    with pytest.raises(ValueError):
        build("per", s, u)


def test_det_alternates_per_symmetrizes():
    # swapping two labels in a column of S negates the bideterminant;
    # swapping within a row fixes the bipermanent
    s = Filling(((1, 2), (3,)))
    s_colswap = Filling(((3, 2), (1,)))
    s_rowswap = Filling(((2, 1), (3,)))
    u = Filling((((0, 1), (1, 0)), ((2, 0),)))
    assert build("det", s_colswap, u).value == -build("det", s, u).value
    assert build("per", s_rowswap, u).value == build("per", s, u).value


def test_straighten_standard_input_is_identity():
    t = Filling.parse("1,2;3")
    v = Filling((((0, 1), (0, 0)), ((1, 0),)))
    assert v.is_column_strict()
    for mode in ("det", "per"):
        out = straighten(mode, t, v)
        assert len(out) == 1
        bt, c = out[0]
        assert c == 1 and bt.left == t and bt.right == v


def test_straighten_zero_polynomial_is_empty():
    # a column of S with equal right entries kills the bideterminant
    s = Filling(((1,), (2,)))
    u = Filling((((0, 0),), ((0, 0),)))
    assert build("det", s, u).value.is_zero()
    assert straighten("det", s, u) == []


def test_straighten_reevaluates_randomized():
    rng = random.Random(20240811)
    letters = [axis_cell(v) for v in (-2, -1, 0, 1)]
    n = 4
    for mode in ("det", "per"):
        for _ in range(30):
            lam = rng.choice(list(partitions_of(n)))
            labels = list(range(1, n + 1))
            rng.shuffle(labels)
            rows, i = [], 0
            for k in lam:
                rows.append(tuple(labels[i : i + k]))
                i += k
            s = Filling(rows)
            entries = [rng.choice(letters) for _ in range(n)]
            rows, i = [], 0
            for k in lam:
                rows.append(tuple(entries[i : i + k]))
                i += k
            u = Filling(rows)
            expansion = straighten(mode, s, u)
            total = SparsePoly.zero(n)
            for bt, c in expansion:
                total = total + standard_unit(mode, bt.left, bt.right).scale(c)
            assert total == build(mode, s, u).value


def test_straighten_triangularity_enforced():
    # every returned term must strictly exceed a non-standard input
    s = Filling.parse("2,1;3")
    u = Filling.parse("-1,1;2", axis=True)
    for mode in ("det", "per"):
        for bt, _ in straighten(mode, s, u):
            assert compare_bitableaux((s, u), bt, mode) < 0


def test_per_applied_small_diagram():
    t = Filling.parse("1,2;3;4")
    c = Filling.parse("-1,2;0;1", axis=True)
    cells = [(0, 2), (0, 0), (1, 0), (3, 0)]
    diagrams, assembled = per_applied_to_delta(t, c, cells)
    assert assembled == per_operator_on_delta_direct(t, c, cells)
    assert all(d.dphi > 0 for d in diagrams)
    n = 4
    y1x2 = SparsePoly.from_monomial(n, ((0, 1, 0, 0), (1, 0, 0, 0)))
    y2x1 = SparsePoly.from_monomial(n, ((1, 0, 0, 0), (0, 1, 0, 0)))
    assert assembled == 12 * y1x2 - 12 * y2x1


def test_per_applied_negative_iota_sign():
    # std(C) differs from T by an odd relabeling here
    t = Filling.parse("1,3;2")
    c = Filling.parse("0,1;2", axis=True)
    cells = [(0, 1), (0, 0), (2, 0)]
    _, assembled = per_applied_to_delta(t, c, cells)
    assert assembled == per_operator_on_delta_direct(t, c, cells)


def test_per_applied_oracle_sweep():
    rng = random.Random(5)
    gamma = HollowGamma.parse("1,1:2,1:1,0")
    cells = gamma.cells()
    tableaux = enumerate_syt(n=4)
    for _ in range(10):
        u = rng.choice(tableaux)
        cfill = cocharge_diagram(gamma, u)
        t = rng.choice([t for t in tableaux if t.shape == u.shape])
        _, assembled = per_applied_to_delta(t, cfill, cells)
        assert assembled == per_operator_on_delta_direct(t, cfill, cells)


def test_per_applied_rejects_offaxis_cells():
    t = Filling.parse("1,2")
    c = Filling.parse("0,0", axis=True)
    with pytest.raises(ValueError):
        per_applied_to_delta(t, c, [(1, 1), (0, 0)])


def test_ephi_zero_multiplicity_from_vanishing_bideterminant():
    # the all-fixed relabeling with a repeated row entry contributes zero
    t = Filling.parse("1,2;3,5;4,6")
    g = HollowGamma.parse("1,1:3,3:2,1")
    u = Filling.parse("1,3;2,4;5,6")
    c = cocharge_diagram(g, u)
    beta = [(0, 3), (0, 1), (0, 0), (2, 0), (3, 0), (5, 0)]
    _, mult = ephi_of(t, c, beta, (2, 1, 3, 4, 5, 6))
    assert mult == 0
