import random
from itertools import product

import pytest

from hollowgh.latticediag import HollowGamma
from hollowgh.tableaux import (
    Filling,
    ResourceCapError,
    axis_cell,
    cocharge_diagram,
    cocharge_pi,
    column_strict_fillings,
    compare_alphabet,
    compare_bitableaux,
    compare_bracket_content,
    compose_columnstrict,
    decompose_columnstrict,
    enumerate_syt,
    hook_length_count,
    pair_key,
    partitions_of,
    standardize,
    std_order_entries,
    transpose_partition,
)

AXIS_WINDOW = [axis_cell(v) for v in range(-3, 4)]


def test_alphabet_order_examples():
    assert compare_alphabet((0, 2), (0, 1)) < 0
    assert compare_alphabet((0, 0), (1, 0)) < 0
    assert compare_alphabet((1, 1), (2, 0)) < 0
    assert compare_alphabet((1, 0), (1, 0)) == 0


def test_axis_order_reads_like_signed_integers():
    values = [-3, -2, -1, 0, 1, 2, 3]
    cells = [axis_cell(v) for v in values]
    assert sorted(cells, key=pair_key) == cells


def test_standardize_idempotent_on_standard():
    for t in enumerate_syt(n=4):
        assert standardize(t) == t


def test_standardize_column_strict_is_standard():
    for shape in partitions_of(4):
        for v in column_strict_fillings(shape, [(0, 1), (0, 0), (0, 0), (1, 0)]):
            assert standardize(v).is_standard()


def test_standardize_single_cell():
    assert standardize(Filling(((((0, 5)),),))) == Filling(((1,),))


def test_transpose_moves_cells_not_entries():
    u = Filling.parse("-2,0,3;-2,-1", axis=True)
    ut = u.transpose()
    assert ut.shape == (2, 2, 1)
    assert ut.rows == (((0, 2), (0, 2)), ((0, 0), (0, 1)), ((3, 0),))
    assert not u.is_column_strict()
    assert ut.transpose() == u


def test_syt_counts_against_hook_lengths():
    assert len(enumerate_syt(shape=(1, 1, 1))) == 1
    assert len(enumerate_syt(shape=(2, 1))) == 2
    assert len(enumerate_syt(n=3)) == 4
    for n in range(1, 8):
        total = len(enumerate_syt(n=n))
        assert total == sum(hook_length_count(lam) for lam in partitions_of(n))
        for lam in partitions_of(n):
            assert len(enumerate_syt(shape=lam)) == hook_length_count(lam)


def test_syt_cap():
    with pytest.raises(ResourceCapError):
        enumerate_syt(n=8)


def test_cocharge_pi_row_and_column():
    row = Filling(((1, 2, 3, 4),))
    assert cocharge_pi(row).rows == ((0, 0, 0, 0),)
    col = Filling(((1,), (2,), (3,)))
    assert cocharge_pi(col).rows == ((0,), (1,), (2,))
    hook = Filling(((1, 2), (3,)))
    assert cocharge_pi(hook).rows == ((0, 0), (1,))


def test_cocharge_pi_rejects_nonstandard():
    with pytest.raises(ValueError):
        cocharge_pi(Filling(((2, 1), (3,))))


def test_cocharge_pi_weakly_increasing_steps():
    for t in enumerate_syt(n=5):
        vals = std_order_entries(cocharge_pi(t), t)
        for a, b in zip(vals, vals[1:]):
            assert a <= b <= a + 1


def test_cocharge_diagram_examples():
    t = Filling(((1, 2), (3,)))
    c = cocharge_diagram(2, t)
    assert c.rows == (((0, 0), (0, 0)), ((1, 0),))
    col = Filling(((1,), (2,), (3,), (4,)))
    c = cocharge_diagram(2, col)
    assert c.rows == (((0, 1),), ((0, 0),), ((1, 0),), ((2, 0),))


def test_cocharge_pin_cell_is_origin():
    for gamma in (HollowGamma.parse("1,1:2,1:1,0"), HollowGamma.parse("1,2:1,1:0,0")):
        for t in enumerate_syt(n=gamma.n):
            c = cocharge_diagram(gamma, t)
            r, col = t.position_of(gamma.pin)
            assert c.entry(r, col) == (0, 0)


def test_decompose_fixed_point():
    gamma = HollowGamma.parse("1,1:2,1:1,0")
    for t in enumerate_syt(n=4):
        u = cocharge_diagram(gamma, t)
        c, alpha = decompose_columnstrict(gamma, u)
        assert c == u
        assert all(a == (0, 0) for a in alpha)


def test_decompose_detects_bad_pin():
    gamma = HollowGamma.parse("1,1:2,1:1,0")
    u = Filling((((1, 0), (2, 0)), ((3, 0), (4, 0))))
    with pytest.raises(ValueError):
        decompose_columnstrict(gamma, u)


def test_compose_rejects_bad_offsets():
    gamma = HollowGamma.parse("1,1:2,1:1,0")
    t = enumerate_syt(n=4)[0]
    with pytest.raises(ValueError):
        compose_columnstrict(gamma, t, ((0, 0), (1, 0), (0, 0), (2, 0)))
    with pytest.raises(ValueError):
        compose_columnstrict(gamma, t, ((0, 1), (0, 0), (0, 0), (1, 0), (1, 0)))


def _random_standard_bitableaux(rng, n, count):
    out = []
    tableaux = enumerate_syt(n=n)
    for _ in range(count):
        t = rng.choice(tableaux)
        fills = column_strict_fillings(
            t.shape, [rng.choice(AXIS_WINDOW) for _ in range(n)]
        )
        if not fills:
            continue
        out.append((t, rng.choice(fills)))
    return out


@pytest.mark.parametrize("mode", ["det", "per", "bitab"])
def test_orders_are_total_orders(mode):
    rng = random.Random(91)
    gamma = 2  # pin index for bitab mode
    for n in (3, 4, 5):
        sample = _random_standard_bitableaux(rng, n, 12)
        for a in sample:
            assert compare_bitableaux(a, a, mode, gamma) == 0
        for a in sample:
            for b in sample:
                cab = compare_bitableaux(a, b, mode, gamma)
                cba = compare_bitableaux(b, a, mode, gamma)
                assert cab == -cba
                if cab == 0:
                    assert a[0] == b[0] and a[1] == b[1]
        for a in sample:
            for b in sample:
                for c in sample:
                    if (
                        compare_bitableaux(a, b, mode, gamma) <= 0
                        and compare_bitableaux(b, c, mode, gamma) <= 0
                    ):
                        assert compare_bitableaux(a, c, mode, gamma) <= 0


def test_compare_rejects_different_sizes():
    a = (Filling(((1, 2),)), Filling((((0, 0), (1, 0)),)))
    b = (Filling(((1, 2, 3),)), Filling((((0, 0), (1, 0), (2, 0)),)))
    with pytest.raises(ValueError):
        compare_bitableaux(a, b, "det")


def test_shape_rule_decides_det_before_content():
    t1 = Filling(((1, 2, 3),))
    u1 = Filling((((0, 3), (0, 2), (0, 1)),))
    t2 = Filling(((1, 2), (3,)))
    u2 = Filling((((0, 0), (0, 0)), ((1, 0),)))
    # shape(t1^t) = (1,1,1) precedes shape(t2^t) = (2,1) despite contents
    assert compare_bitableaux((t1, u1), (t2, u2), "det") < 0


def test_bracket_content_order():
    assert compare_bracket_content(((2, 1), (0, 0)), ((1, 1), (4, 4))) > 0
    assert compare_bracket_content(((1, 1), (3, 0)), ((1, 1), (2, 2))) > 0
    assert compare_bracket_content(((1, 0), (2, 2)), ((1, 0), (2, 2))) == 0
    with pytest.raises(ValueError):
        compare_bracket_content(((1,), (2, 2)), ((1, 1), (2, 2)))


def test_filling_parse_render_round_trip():
    for text in ("1,2;3", "-2,0,3;-2,-1", "0,3;(1,2)"):
        axis = "(" in text or "-" in text or text == "0,3;(1,2)"
        f = Filling.parse(text, axis=axis)
        assert Filling.parse(f.render(), axis=axis) == f


def test_transpose_partition_involution():
    for lam in partitions_of(6):
        assert transpose_partition(transpose_partition(lam)) == lam
