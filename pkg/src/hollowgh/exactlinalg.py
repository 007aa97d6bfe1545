"""Exact rank, echelon bases and linear solves over the rationals.

Rows are sparse mappings from hashable column keys to values.  Rank work
clears denominators and runs fraction-free over Python integers, so
results are exact and entries stay as small as gcd reduction allows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Optional, Sequence


def _to_int_row(row: Mapping[Hashable, Fraction]) -> dict:
    """Clear denominators and divide by the content, keeping the sign."""
    items = {k: Fraction(v) for k, v in row.items() if v != 0}
    if not items:
        return {}
    denom_lcm = 1
    for v in items.values():
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = {k: int(v * denom_lcm) for k, v in items.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {k: v // g for k, v in ints.items()}


class RowReducer:
    """Incremental row-echelon accumulator over the integers.

    insert() reduces a row against the stored pivot rows and either absorbs
    it (row was dependent) or stores it as a new pivot row.  The pivot of a
    row is its maximal column key, so keys within one matrix must be
    mutually comparable (tuples of like shape, or strings).
    """

    def __init__(self):
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, row: Mapping) -> bool:
        work = _to_int_row(row)
        while work:
            piv = max(work, key=_colkey)
            if piv not in self.pivots:
                self.pivots[piv] = work
                return True
            other = self.pivots[piv]
            a, b = work[piv], other[piv]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            merged = {}
            for k in set(work) | set(other):
                v = ma * work.get(k, 0) - mb * other.get(k, 0)
                if v:
                    merged[k] = v
            g = 0
            for v in merged.values():
                g = gcd(g, v)
            work = {k: v // g for k, v in merged.items()} if merged else {}
        return False


def _colkey(k):
    """Total order on column keys; ours are same-shaped tuples (or strings)."""
    return k


def rank_of_rows(rows: Iterable[Mapping]) -> int:
    red = RowReducer()
    for row in rows:
        red.insert(row)
    return red.rank


def rref_basis(rows: Iterable[Mapping]) -> tuple[list, list[dict]]:
    """Fully reduced echelon basis of the row space, over Fraction.

    Returns (pivot_keys, basis_rows) where basis_rows[i] has value 1 at
    pivot_keys[i] and 0 at every other pivot key.
    """
    red = RowReducer()
    for row in rows:
        red.insert(row)
    pivs = sorted(red.pivots, key=_colkey, reverse=True)
    basis = []
    for p in pivs:
        r = red.pivots[p]
        basis.append({k: Fraction(v, r[p]) for k, v in r.items()})
    # back-substitute to clear pivot columns above
    for i in range(len(basis) - 1, -1, -1):
        for j in range(i):
            c = basis[j].get(pivs[i], 0)
            if c:
                for k, v in basis[i].items():
                    nv = basis[j].get(k, 0) - c * v
                    if nv:
                        basis[j][k] = nv
                    else:
                        basis[j].pop(k, None)
    return pivs, basis


class SpanSolver:
    """Prefactored exact solver for repeated expressions in a fixed span.

    Built once from a list of linearly independent sparse vectors; express()
    then writes any target as their unique combination (or None when the
    target lies outside the span).  All arithmetic is over Fraction.
    """

    def __init__(self, columns: Sequence[Mapping]):
        self.ncols = len(columns)
        self._rows: dict = {}
        self._combs: dict = {}
        for idx, col in enumerate(columns):
            work = {k: Fraction(v) for k, v in col.items() if v != 0}
            comb = [Fraction(0)] * self.ncols
            comb[idx] = Fraction(1)
            work, comb = self._reduce(work, comb)
            if not work:
                raise ValueError(f"column {idx} depends on earlier columns")
            piv = max(work)
            c0 = work[piv]
            self._rows[piv] = {k: v / c0 for k, v in work.items()}
            self._combs[piv] = [a / c0 for a in comb]

    def _reduce(self, work: dict, comb: Optional[list]):
        while work:
            piv = max(work)
            row = self._rows.get(piv)
            if row is None:
                break
            c = work.pop(piv)
            for k, v in row.items():
                if k == piv:
                    continue
                nv = work.get(k, 0) - c * v
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
            if comb is not None:
                pcomb = self._combs[piv]
                comb = [a - c * b for a, b in zip(comb, pcomb)]
        return work, comb

    def express(self, target: Mapping) -> Optional[list[Fraction]]:
        work = {k: Fraction(v) for k, v in target.items() if v != 0}
        coeffs = [Fraction(0)] * self.ncols
        while work:
            piv = max(work)
            row = self._rows.get(piv)
            if row is None:
                return None
            c = work.pop(piv)
            for k, v in row.items():
                if k == piv:
                    continue
                nv = work.get(k, 0) - c * v
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
            pcomb = self._combs[piv]
            for i, b in enumerate(pcomb):
                if b:
                    coeffs[i] += c * b
        return coeffs


def solve_unique(
    columns: Sequence[Mapping], target: Mapping
) -> Optional[list[Fraction]]:
    """Solve sum_i c_i * columns[i] = target, requiring a unique solution.

    Returns the coefficient list, or None when the system is inconsistent.
    Raises when the columns are linearly dependent (solution not unique).
    """
    ncols = len(columns)
    rowkeys = set(target)
    for col in columns:
        rowkeys.update(col)
    rows = []
    for rk in sorted(rowkeys, key=_colkey):
        vec = [Fraction(col.get(rk, 0)) for col in columns]
        vec.append(Fraction(target.get(rk, 0)))
        rows.append(vec)

    pivot_cols = []
    rpos = 0
    for c in range(ncols):
        sel = None
        for r in range(rpos, len(rows)):
            if rows[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[rpos], rows[sel] = rows[sel], rows[rpos]
        pv = rows[rpos][c]
        rows[rpos] = [v / pv for v in rows[rpos]]
        for r in range(len(rows)):
            if r != rpos and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rpos])]
        pivot_cols.append(c)
        rpos += 1
    if len(pivot_cols) < ncols:
        raise ValueError("columns are linearly dependent; solution not unique")
    for r in range(rpos, len(rows)):
        if rows[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        sol[c] = rows[i][ncols]
    return sol
