"""Bideterminants, bipermanents, straightening, and derivative expansions.

A shape-matched pair (S, U), with S injectively filled by 1..n and U
filled from an entry alphabet, names the monomial z_1^{u_1} ... z_n^{u_n}
where u_i sits in U at the cell holding i in S.  Summing its images over
the row stabilizer of S gives the bipermanent; the signed sum over the
column stabilizer gives the bideterminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .exactlinalg import SpanSolver
from .exactpoly import SparsePoly, apply_diff
from .latticediag import delta
from .tableaux import (
    Bitableau,
    Filling,
    ResourceCapError,
    column_strict_fillings,
    compare_bitableaux,
    enumerate_syt,
    is_axis,
    partitions_of,
    standardize,
)


@dataclass(frozen=True)
class BitabPoly:
    source: Bitableau
    kind: str
    value: SparsePoly


def _entry_pairs(source: Bitableau) -> list[tuple[int, int]]:
    """u_i as exponent pairs indexed by the labels of the left filling."""
    s, u = source.left, source.right
    seq = s.row_sequence()
    if sorted(seq) != list(range(1, s.size + 1)):
        raise ValueError("left filling must contain 1..n exactly once")
    exps = [None] * s.size
    for r, c in s.cells():
        e = u.entry(r, c)
        if isinstance(e, int):
            e = (e, 0) if e >= 0 else (0, -e)
        a, b = e
        if a < 0 or b < 0:
            raise ValueError(f"entry {e} has a negative coordinate")
        exps[s.entry(r, c) - 1] = (a, b)
    return exps


def _groups(filling: Filling, by: str) -> list[list[int]]:
    if by == "row":
        return [list(row) for row in filling.rows]
    cols: list[list[int]] = [[] for _ in range(filling.shape[0])]
    for r, row in enumerate(filling.rows):
        for c, v in enumerate(row):
            cols[c].append(v)
    return cols


def _stabilizer(groups: list[list[int]], n: int, signed: bool):
    """Permutations of 1..n fixing each group setwise, with signs."""
    out = [(list(range(n + 1)), 1)]  # index 0 unused
    for grp in groups:
        new = []
        for base, sign in out:
            for perm in permutations(grp):
                psign = 1
                if signed:
                    psign = _sign_of(grp, perm)
                assigned = list(base)
                for src, dst in zip(grp, perm):
                    assigned[src] = dst
                new.append((assigned, sign * psign))
        out = new
    return out


def _sign_of(src: Sequence[int], dst: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(src)}
    perm = [pos[v] for v in dst]
    sign = 1
    seen = [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        ln, j = 0, s
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def build(kind: str, left: Filling, right: Filling) -> BitabPoly:
    """The bideterminant (kind 'det') or bipermanent (kind 'per') of (S, U)."""
    if kind not in ("det", "per"):
        raise ValueError(f"kind must be 'det' or 'per', got {kind!r}")
    source = Bitableau(left, right)
    exps = _entry_pairs(source)
    n = source.size
    groups = _groups(left, "col" if kind == "det" else "row")
    terms: dict = {}
    for assigned, sign in _stabilizer(groups, n, signed=(kind == "det")):
        xexp = [0] * n
        yexp = [0] * n
        for i in range(1, n + 1):
            a, b = exps[i - 1]
            xexp[assigned[i] - 1] += a
            yexp[assigned[i] - 1] += b
        mono = (tuple(xexp), tuple(yexp))
        s = terms.get(mono, 0) + sign
        if s == 0:
            terms.pop(mono, None)
        else:
            terms[mono] = s
    return BitabPoly(source, kind, SparsePoly(n, terms))


def row_repetition_factor(left: Filling, right: Filling) -> int:
    """Size of the stabilizer of the base monomial inside the row group.

    The product over rows of S of the factorials of the multiplicities of
    repeated right-hand entries among that row's cells.  It is 1 whenever
    no row repeats an entry.
    """
    out = 1
    for r, row in enumerate(left.rows):
        counts: dict = {}
        for c in range(len(row)):
            e = right.entry(r, c)
            counts[e] = counts.get(e, 0) + 1
        for m in counts.values():
            out *= factorial(m)
    return out


def standard_unit(kind: str, left: Filling, right: Filling) -> SparsePoly:
    """The basis polynomial used by straighten for a standard pair.

    For 'det' this is the bideterminant itself.  For 'per' the bipermanent
    is divided by the row repetition factor, giving the orbit sum with unit
    coefficients; plain bipermanents with a repeated entry in a row have
    provably fractional expansions, so the integrality promised by the
    straightening law lives in this reduced basis.
    """
    value = build(kind, left, right).value
    if kind == "per":
        rf = row_repetition_factor(left, right)
        if rf != 1:
            value = value.scale(Fraction(1, rf))
    return value


@lru_cache(maxsize=512)
def _standard_basis_solver(kind: str, n: int, content: tuple):
    """Candidate standard bitableaux of the given content, prefactored."""
    candidates: list[Bitableau] = []
    vectors: list[dict] = []
    for lam in partitions_of(n):
        for v_fill in column_strict_fillings(lam, content):
            for t_fill in enumerate_syt(shape=lam):
                candidates.append(Bitableau(t_fill, v_fill))
                vectors.append(standard_unit(kind, t_fill, v_fill).terms)
    return candidates, SpanSolver(vectors)


def straighten(kind: str, left: Filling, right: Filling) -> list[tuple[Bitableau, int]]:
    """Expand (S, U) over the standard bitableaux of the same content.

    The expansion is against standard_unit values: bideterminants as they
    stand, bipermanents divided by their row repetition factors.  An exact
    linear solve finds the coefficients, then the promises of the
    straightening law are certified: integrality, and strict growth in the
    det/per order when the input is not already standard.  Results are
    sorted ascending in that order.
    """
    target = build(kind, left, right)
    n = target.source.size
    if target.value.is_zero():
        return []
    content = target.source.right.content()
    candidates, solver = _standard_basis_solver(kind, n, content)
    coeffs = solver.express(target.value.terms)
    if coeffs is None:
        raise RuntimeError("bitableau polynomial not in the span of its content class")
    out = []
    input_standard = target.source.is_standard()
    for cand, c in zip(candidates, coeffs):
        if c == 0:
            continue
        if c.denominator != 1:
            raise RuntimeError(f"non-integer straightening coefficient {c}")
        if not input_standard:
            if compare_bitableaux(target.source, cand, kind) >= 0:
                raise RuntimeError(
                    f"straightening term {cand.render()} does not exceed the input"
                )
        out.append((cand, int(c)))
    out.sort(key=_order_key(kind))
    return out


def _order_key(kind):
    import functools

    def cmp(a, b):
        return compare_bitableaux(a[0], b[0], kind)

    return functools.cmp_to_key(cmp)


# ---------------------------------------------------------------------------
# bipermanent differential operators against diagram determinants


@dataclass(frozen=True)
class EPhiDiagram:
    """One permutation's contribution when a bipermanent operator hits a
    diagram determinant: the shifted-exponent diagram and its multiplicity."""

    phi: tuple[int, ...]
    diagram: Filling
    dphi: int


def _falling_pair(top: tuple[int, int], bot: tuple[int, int]) -> int:
    out = 1
    for t, b in zip(top, bot):
        if b > t:
            return 0
        out *= factorial(t) // factorial(t - b)
    return out


def per_applied_to_delta(
    tableau: Filling, cochg: Filling, cells: Sequence[tuple[int, int]], cap: int = 7
):
    """Expand [T, C]_per(d/dX, d/dY) applied to the determinant of a diagram.

    Returns (diagrams, poly): one EPhiDiagram per permutation phi with
    nonzero multiplicity, and the assembled polynomial

        sgn(iota) * sum_phi sgn(phi) * d_phi * [T^t, (E_phi)^t]_det,

    which equals the direct derivative exactly.  The entry of E_phi at the
    cell of i in T is cells[phi(iota(i))] - c_i; the multiplicity d_phi is
    the product of falling factorials, zeroed when the bideterminant
    vanishes identically.  Restricted to diagrams with axis cells only.
    """
    cells = tuple((int(a), int(b)) for a, b in cells)
    n = len(cells)
    if n != tableau.size:
        raise ValueError("diagram size does not match tableau size")
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds cap {cap}")
    if any(not is_axis(cell) for cell in cells):
        raise ValueError("diagram must consist of axis cells")
    if tableau.shape != cochg.shape:
        raise ValueError("shape mismatch between tableau and cocharge filling")
    if not cochg.is_column_strict():
        raise ValueError("right filling must be column strict")

    std_c = standardize(cochg)
    pos_t = {tableau.entry(r, c): (r, c) for r, c in tableau.cells()}
    iota = [0] * (n + 1)
    for i in range(1, n + 1):
        r, c = pos_t[i]
        iota[i] = std_c.entry(r, c)
    sgn_iota = _sign_of(list(range(1, n + 1)), iota[1:])

    c_entries = [None] * (n + 1)
    for i in range(1, n + 1):
        c_entries[i] = cochg.entry(*pos_t[i])

    t_trans = tableau.transpose()
    diagrams: list[EPhiDiagram] = []
    total = SparsePoly.zero(n)
    for phi in permutations(range(1, n + 1)):
        entries = {}
        d_phi = 1
        for i in range(1, n + 1):
            cell = cells[phi[iota[i] - 1] - 1]
            ci = c_entries[i]
            d_phi *= _falling_pair(cell, ci)
            if d_phi == 0:
                break
            entries[pos_t[i]] = (cell[0] - ci[0], cell[1] - ci[1])
        if d_phi == 0:
            continue
        e_fill = Filling(
            tuple(
                tuple(entries[(r, c)] for c in range(tableau.shape[r]))
                for r in range(len(tableau.shape))
            )
        )
        bidet = build("det", t_trans, e_fill.transpose())
        if bidet.value.is_zero():
            d_phi = 0
        else:
            sgn_phi = _sign_of(list(range(1, n + 1)), list(phi))
            total = total + bidet.value.scale(sgn_iota * sgn_phi * d_phi)
            diagrams.append(EPhiDiagram(tuple(phi), e_fill, d_phi))
    return diagrams, total


def per_operator_on_delta_direct(
    tableau: Filling, cochg: Filling, cells: Sequence[tuple[int, int]], cap: int = 7
) -> SparsePoly:
    """Independent route: build the bipermanent and differentiate directly."""
    op = build("per", tableau, cochg).value
    return apply_diff(op, delta(cells, cap=cap))


def ephi_of(
    tableau: Filling, cochg: Filling, cells: Sequence[tuple[int, int]], phi: Sequence[int]
) -> tuple[Filling, int]:
    """The shifted diagram and raw falling-factorial multiplicity for one phi.

    Unlike per_applied_to_delta this reports the diagram even when the
    multiplicity is zero or the bideterminant vanishes; entries may then
    fall outside the axis alphabet.
    """
    n = tableau.size
    std_c = standardize(cochg)
    pos_t = {tableau.entry(r, c): (r, c) for r, c in tableau.cells()}
    entries = {}
    mult = 1
    for i in range(1, n + 1):
        r, c = pos_t[i]
        cell = cells[phi[std_c.entry(r, c) - 1] - 1]
        ci = cochg.entry(r, c)
        mult *= _falling_pair(cell, ci)
        entries[(r, c)] = (cell[0] - ci[0], cell[1] - ci[1])
    e_fill = Filling(
        tuple(
            tuple(entries[(r, c)] for c in range(tableau.shape[r]))
            for r in range(len(tableau.shape))
        )
    )
    if mult:
        bidet = build("det", tableau.transpose(), e_fill.transpose())
        if bidet.value.is_zero():
            mult = 0
    return e_fill, mult
