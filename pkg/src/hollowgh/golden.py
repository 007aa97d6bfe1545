"""Replay of the worked-example corpus shipped under data/examples.

Each JSON document holds one independently checkable identity: an input,
an expected outcome, and a check kind naming the verification recipe.
The corpus is data, not test code, so other implementations can replay
the same files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .bitab import build, ephi_of, per_applied_to_delta, per_operator_on_delta_direct, straighten
from .exactpoly import SparsePoly, apply_diff
from .ghmod import basis
from .latticediag import HollowGamma, delta
from .symfun import (
    complete_product,
    domino_count,
    elementary,
    macmahon_monomial,
    max_type,
    max_type_inverse,
)
from .tableaux import (
    Filling,
    axis_cell,
    compare_bitableaux,
    compose_columnstrict,
    decompose_columnstrict,
    cocharge_diagram,
    standardize,
)


@dataclass
class GoldenResult:
    name: str
    passed: bool
    detail: str = ""


def load_cases() -> list[dict]:
    root = resources.files("hollowgh").joinpath("data/examples")
    cases = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            cases.append(json.loads(entry.read_text()))
    return cases


def run_all() -> list[GoldenResult]:
    return [run_case(case) for case in load_cases()]


def run_case(case: dict) -> GoldenResult:
    name = case["name"]
    try:
        _CHECKS[case["check"]](case)
    except AssertionError as exc:
        return GoldenResult(name, False, str(exc))
    except Exception as exc:  # surface broken case files loudly
        return GoldenResult(name, False, f"{type(exc).__name__}: {exc}")
    return GoldenResult(name, True)


# -- helpers -----------------------------------------------------------------


def _poly_from_terms(n: int, terms) -> SparsePoly:
    return SparsePoly(
        n,
        {
            (tuple(xexp), tuple(yexp)): Fraction(coeff)
            for coeff, xexp, yexp in terms
        },
    )


def _operator_poly(spec: dict, n: int) -> SparsePoly:
    kind = spec["kind"]
    if kind == "poly":
        return _poly_from_terms(n, spec["terms"])
    if kind == "complete_product":
        return complete_product(tuple(spec["parts"]), n, spec.get("which", "x"))
    if kind == "elementary":
        return elementary(spec["degree"], n, spec.get("which", "x"))
    if kind == "biperm":
        t = Filling.parse(spec["tableau"])
        c = Filling.parse(spec["right"], axis=True)
        return build("per", t, c).value
    raise ValueError(f"unknown operator kind {kind!r}")


def _expected_poly(spec: dict, n: int) -> SparsePoly:
    kind = spec["kind"]
    if kind == "zero":
        return SparsePoly.zero(n)
    if kind == "poly":
        return _poly_from_terms(n, spec["terms"])
    if kind == "delta_combo":
        out = SparsePoly.zero(n)
        for coeff, cells in spec["terms"]:
            out = out + delta([tuple(c) for c in cells]).scale(Fraction(coeff))
        return out
    raise ValueError(f"unknown expected kind {kind!r}")


def _axis_list(values) -> list[tuple[int, int]]:
    return [axis_cell(v) if isinstance(v, int) else tuple(v) for v in values]


# -- check recipes -----------------------------------------------------------


def _check_derivative_identity(case):
    cells = [tuple(c) for c in case["cells"]]
    n = len(cells)
    op = _operator_poly(case["operator"], n)
    lhs = apply_diff(op, delta(cells))
    rhs = _expected_poly(case["expected"], n)
    assert lhs == rhs, f"derivative mismatch: got {lhs.render()}"


def _check_derivative_chain(case):
    cells = [tuple(c) for c in case["cells"]]
    n = len(cells)
    current = delta(cells)
    for step in case["steps"]:
        op = _operator_poly(step["operator"], n)
        lhs = apply_diff(op, current)
        rhs = _expected_poly(step["expected"], n)
        assert lhs == rhs, f"step {step['operator']}: got {lhs.render()[:120]}"
        current = rhs


def _check_sequences(case):
    u = Filling.parse(case["filling"], axis=True)
    exp = case["expected"]
    assert list(u.row_sequence()) == _axis_list(exp["row"]), "row sequence differs"
    assert list(u.column_sequence()) == _axis_list(exp["col"]), "column sequence differs"
    assert list(u.content()) == _axis_list(exp["content"]), "content differs"


def _check_standardize(case):
    u = Filling.parse(case["filling"], axis=True)
    expected = Filling.parse(case["expected"])
    got = standardize(u)
    assert got == expected, f"standardization differs: {got.render()}"


def _check_straighten(case):
    left = Filling.parse(case["left"])
    right = Filling.parse(case["right"], axis=True)
    mode = case["mode"]
    if "expected_poly" in case:
        val = build(mode, left, right).value
        exp = _poly_from_terms(left.size, case["expected_poly"])
        assert val == exp, f"bitableau polynomial differs: {val.render()}"
    got = straighten(mode, left, right)
    want = {
        (Filling.parse(l), Filling.parse(r, axis=True)): c
        for l, r, c in case["expected"]
    }
    have = {(bt.left, bt.right): c for bt, c in got}
    assert have == want, f"straightening differs: {[(b.render(), c) for b, c in got]}"


def _check_macmahon_product(case):
    t = Filling.parse(case["tableau"])
    u = Filling.parse(case["right"], axis=True)
    n = t.size
    beta = _axis_list(case["beta"])
    lhs = macmahon_monomial(beta, n) * build("per", t, u).value
    rhs = SparsePoly.zero(n)
    for l, r, c in case["expected"]:
        rhs = rhs + build("per", Filling.parse(l), Filling.parse(r, axis=True)).value.scale(c)
    assert lhs == rhs, "orbit-sum product expansion differs"


def _check_ephi_table(case):
    t = Filling.parse(case["tableau"])
    u = Filling.parse(case["syt"])
    gamma = HollowGamma.parse(case["gamma"])
    c = cocharge_diagram(gamma, u)
    if "cochg" in case:
        assert c == Filling.parse(case["cochg"], axis=True), "cocharge filling differs"
    if "operator_terms" in case:
        op = build("per", t, c).value
        exp = _poly_from_terms(t.size, case["operator_terms"])
        assert op == exp, f"operator polynomial differs: {op.render()}"
    cells = [tuple(x) for x in case["cells"]]
    diagrams, assembled = per_applied_to_delta(t, c, cells)
    direct = per_operator_on_delta_direct(t, c, cells)
    assert assembled == direct, "assembled expansion differs from direct derivative"
    by_phi = {d.phi: d for d in diagrams}
    for row in case["rows"]:
        phi = tuple(row["phi"])
        e_expected = Filling.parse(row["e_transpose"], axis=True)
        e_got, mult = ephi_of(t, c, cells, phi)
        assert e_got.transpose() == e_expected, f"phi {phi}: diagram differs"
        assert mult == row["d"], f"phi {phi}: multiplicity {mult} != {row['d']}"
        if row["d"] == 0:
            assert phi not in by_phi, f"phi {phi} should not contribute"
        else:
            assert phi in by_phi and by_phi[phi].dphi == row["d"]


def _check_hollow_cells(case):
    gamma = HollowGamma.parse(case["gamma"])
    cells = gamma.cells()
    if "expected_cells" in case:
        assert list(map(list, cells)) == case["expected_cells"], f"cells {cells}"
    if "expected_count" in case:
        assert len(cells) == case["expected_count"], f"{len(cells)} cells"


def _check_bracket_cells(case):
    gamma = HollowGamma.parse(case["gamma"])
    cells = gamma.bracket_cells(tuple(case["leg"]), tuple(case["arm"]))
    assert list(map(list, cells)) == case["expected_cells"], f"cells {cells}"


def _check_delta_zero(case):
    cells = [tuple(c) for c in case["cells"]]
    assert delta(cells).is_zero(), "determinant should vanish"


def _check_domino_count(case):
    got = domino_count(tuple(case["shape"]), tuple(case["type"]))
    assert got == case["expected"], f"count {got}"


def _check_max_type(case):
    got = max_type(tuple(case["shape"]), case["gap"])
    assert got == tuple(case["expected"]), f"type {got}"
    if "sign" in case:
        d = domino_count(tuple(case["shape"]), got)
        size, length = sum(got), len(got)
        signed = d * (-1 if (size - length) % 2 else 1)
        assert signed == case["sign"] * case["lead_count"], f"leading term {signed}"
    if "low" in case:
        back = max_type_inverse(got, case["low"], case["gap"])
        assert back == tuple(case["shape"]), f"inverse {back}"


def _check_decompose_roundtrip(case):
    gamma = HollowGamma.parse(case["gamma"])
    t = Filling.parse(case["tableau"])
    alpha = tuple(_axis_list(case["alpha"]))
    u = compose_columnstrict(gamma, t, alpha)
    assert u.is_column_strict(), "composed filling is not column strict"
    c_fill, alpha_back = decompose_columnstrict(gamma, u)
    assert alpha_back == alpha, f"offsets differ: {alpha_back}"
    assert c_fill == cocharge_diagram(gamma, t), "cocharge filling differs"


def _check_basis_counts(case):
    gamma = HollowGamma.parse(case["gamma"])
    if "expected_biperm" in case:
        got = len(basis(gamma, "biperm"))
        assert got == case["expected_biperm"], f"biperm count {got}"
    if "expected_h_extended" in case:
        got = len(basis(gamma, "h_extended"))
        assert got == case["expected_h_extended"], f"extended count {got}"


def _check_order(case):
    a = (Filling.parse(case["left1"]), Filling.parse(case["right1"], axis=True))
    b = (Filling.parse(case["left2"]), Filling.parse(case["right2"], axis=True))
    got = compare_bitableaux(a, b, case["mode"])
    want = {"less": -1, "equal": 0, "greater": 1}[case["expected"]]
    assert got == want, f"comparison gave {got}"


_CHECKS = {
    "derivative_identity": _check_derivative_identity,
    "derivative_chain": _check_derivative_chain,
    "sequences": _check_sequences,
    "standardize": _check_standardize,
    "straighten": _check_straighten,
    "macmahon_product": _check_macmahon_product,
    "ephi_table": _check_ephi_table,
    "hollow_cells": _check_hollow_cells,
    "bracket_cells": _check_bracket_cells,
    "delta_repeated_zero": _check_delta_zero,
    "domino_count": _check_domino_count,
    "max_type": _check_max_type,
    "decompose_roundtrip": _check_decompose_roundtrip,
    "basis_counts": _check_basis_counts,
    "order": _check_order,
}
