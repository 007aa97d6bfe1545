"""Symmetric polynomial constructors, domino tabloid counts and q-utilities.

Everything is exact: polynomials come back as SparsePoly values and the
series utilities as integer coefficient tables.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exactpoly import SparsePoly
from .tableaux import (
    check_partition,
    distinct_permutations,
    pair_key,
    partitions_of,
)


# ---------------------------------------------------------------------------
# bigraded coefficient tables


class SeriesTable:
    """Integer coefficients indexed by bidegree (r, s).

    trunc, when set, is an inclusive bound (R, S): entries beyond it are
    unknown rather than zero.  Two tables are equal when they agree on the
    common known region.  One-variable series pin s = 0.
    """

    __slots__ = ("entries", "trunc")

    def __init__(self, entries=None, trunc: Optional[tuple[int, int]] = None):
        self.entries: dict[tuple[int, int], int] = {}
        if entries:
            for (r, s), c in entries.items():
                if c != 0:
                    self.entries[(int(r), int(s))] = int(c)
        self.trunc = trunc

    @classmethod
    def one(cls) -> "SeriesTable":
        return cls({(0, 0): 1})

    def coeff(self, r: int, s: int) -> int:
        return self.entries.get((r, s), 0)

    def _known(self, rs: tuple[int, int]) -> bool:
        return self.trunc is None or (rs[0] <= self.trunc[0] and rs[1] <= self.trunc[1])

    @staticmethod
    def _merge_trunc(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return (min(a[0], b[0]), min(a[1], b[1]))

    def __add__(self, other: "SeriesTable") -> "SeriesTable":
        trunc = self._merge_trunc(self.trunc, other.trunc)
        keys = set(self.entries) | set(other.entries)
        return SeriesTable(
            {k: self.coeff(*k) + other.coeff(*k) for k in keys if trunc is None or (k[0] <= trunc[0] and k[1] <= trunc[1])},
            trunc,
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return SeriesTable({k: other * c for k, c in self.entries.items()}, self.trunc)
        trunc = self._merge_trunc(self.trunc, other.trunc)
        out: dict[tuple[int, int], int] = {}
        for (r1, s1), c1 in self.entries.items():
            for (r2, s2), c2 in other.entries.items():
                k = (r1 + r2, s1 + s2)
                if trunc is not None and (k[0] > trunc[0] or k[1] > trunc[1]):
                    continue
                out[k] = out.get(k, 0) + c1 * c2
        return SeriesTable(out, trunc)

    __rmul__ = __mul__

    def truncate(self, trunc: tuple[int, int]) -> "SeriesTable":
        new = self._merge_trunc(self.trunc, trunc)
        return SeriesTable(
            {k: c for k, c in self.entries.items() if k[0] <= new[0] and k[1] <= new[1]},
            new,
        )

    def total(self) -> int:
        """Evaluation at t = q = 1 (finite tables only)."""
        if self.trunc is not None:
            raise ValueError("total of a truncated table is not defined")
        return sum(self.entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesTable):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        for k in keys:
            if self._known(k) and other._known(k):
                if self.coeff(*k) != other.coeff(*k):
                    return False
        return True

    def __hash__(self):
        raise TypeError("SeriesTable is unhashable (equality is up to truncation)")

    def json_triples(self) -> list[list[int]]:
        return [[r, s, self.entries[(r, s)]] for r, s in sorted(self.entries)]

    def render(self, tvar: str = "t", qvar: str = "q") -> str:
        if not self.entries:
            return "0"
        parts = []
        for r, s in sorted(self.entries):
            c = self.entries[(r, s)]
            factors = []
            if r:
                factors.append(tvar if r == 1 else f"{tvar}^{r}")
            if s:
                factors.append(qvar if s == 1 else f"{qvar}^{s}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"SeriesTable({self.render()!r}, trunc={self.trunc})"


# ---------------------------------------------------------------------------
# symmetric polynomials


def _axis_exponents(n: int, which: str, exps: Sequence[int]):
    zero = (0,) * n
    if which == "x":
        return (tuple(exps), zero)
    if which == "y":
        return (zero, tuple(exps))
    raise ValueError("which must be 'x' or 'y'")


def elementary(r: int, n: int, which: str = "x") -> SparsePoly:
    """e_r in the x- or y-variables; e_0 = 1 and e_r = 0 for r > n."""
    if r < 0:
        raise ValueError("negative degree")
    if r == 0:
        return SparsePoly.one(n)
    if r > n:
        return SparsePoly.zero(n)
    terms = {}
    for subset in combinations(range(n), r):
        exps = [1 if i in subset else 0 for i in range(n)]
        terms[_axis_exponents(n, which, exps)] = 1
    return SparsePoly(n, terms)


def complete(r: int, n: int, which: str = "x") -> SparsePoly:
    """h_r: the sum of all monomials of degree r in one variable set."""
    if r < 0:
        raise ValueError("negative degree")
    terms = {}
    for exps in _compositions(r, n):
        terms[_axis_exponents(n, which, exps)] = 1
    return SparsePoly(n, terms)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_sym(lam: Sequence[int], n: int, which: str = "x") -> SparsePoly:
    """m_lambda: the orbit sum of x^lambda over distinct permutations."""
    lam = check_partition(lam) if lam else ()
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    padded = tuple(lam) + (0,) * (n - len(lam))
    terms = {}
    for perm in distinct_permutations(padded):
        terms[_axis_exponents(n, which, perm)] = 1
    return SparsePoly(n, terms)


def macmahon_monomial(beta: Sequence[tuple[int, int]], n: int) -> SparsePoly:
    """Two-alphabet orbit sum: distinct permutations of a tuple of pairs."""
    beta = tuple((int(a), int(b)) for a, b in beta)
    if len(beta) != n:
        raise ValueError(f"need {n} pairs, got {len(beta)}")
    terms = {}
    for perm in distinct_permutations(beta):
        xexp = tuple(p[0] for p in perm)
        yexp = tuple(p[1] for p in perm)
        terms[(xexp, yexp)] = 1
    return SparsePoly(n, terms)


def elementary_product(lam: Sequence[int], n: int, which: str = "x") -> SparsePoly:
    out = SparsePoly.one(n)
    for r in lam:
        out = out * elementary(r, n, which)
    return out


def complete_product(lam: Sequence[int], n: int, which: str = "x") -> SparsePoly:
    out = SparsePoly.one(n)
    for r in lam:
        out = out * complete(r, n, which)
    return out


# ---------------------------------------------------------------------------
# domino tabloids and the h-to-e change of basis


def domino_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of tilings of the rows of lam by horizontal dominoes of
    lengths mu (equal lengths indistinguishable).

    Counted row by row: a row of length L tiled by an ordered sequence of
    dominoes contributes the number of distinct orderings of the chosen
    sub-multiset.  Zero when the sizes differ.
    """
    lam = check_partition(lam) if lam else ()
    mu = check_partition(mu) if mu else ()
    if sum(lam) != sum(mu):
        return 0
    values = sorted(set(mu), reverse=True)
    counts = tuple(mu.count(v) for v in values)

    @cache
    def row_fillings(length: int, avail: tuple[int, ...]) -> dict:
        """Map from remaining-count vector to arrangement count after tiling
        one row of the given length."""
        if length == 0:
            return {avail: 1}
        out: dict = {}
        for i, v in enumerate(values):
            if avail[i] == 0 or v > length:
                continue
            rest = list(avail)
            rest[i] -= 1
            for after, ways in row_fillings(length - v, tuple(rest)).items():
                out[after] = out.get(after, 0) + ways
        return out

    @cache
    def count_rows(idx: int, avail: tuple[int, ...]) -> int:
        if idx == len(lam):
            return 1 if all(a == 0 for a in avail) else 0
        total = 0
        for after, ways in row_fillings(lam[idx], avail).items():
            total += ways * count_rows(idx + 1, after)
        return total

    return count_rows(0, counts)


def h_to_e_expand(lam: Sequence[int], cap: int = 8) -> list[tuple[tuple[int, ...], int]]:
    """Signed expansion of h_lambda into products e_mu via domino counts.

    Returns pairs (mu, (-1)^(|mu| - len(mu)) * d_{lambda,mu}) over all mu
    with nonzero count.
    """
    lam = check_partition(lam) if lam else ()
    if sum(lam) > cap:
        raise ValueError(f"|lambda| = {sum(lam)} exceeds cap {cap}")
    out = []
    for mu in partitions_of(sum(lam)):
        d = domino_count(lam, mu)
        if d:
            sign = -1 if (sum(mu) - len(mu)) % 2 else 1
            out.append((mu, sign * d))
    return out


def max_type(lam: Sequence[int], gap: int) -> tuple[int, ...]:
    """The largest partition with parts at most gap+1 reachable by tiling
    the rows of lam; gap plays the role of the detached block length.

    Residue f of a part (mod gap+1, for 1 <= f <= gap) contributes one part
    f; full multiples contribute parts gap+1.
    """
    lam = check_partition(lam) if lam else ()
    if gap < 0:
        raise ValueError("gap must be nonnegative")
    width = gap + 1
    counts = {f: 0 for f in range(1, width + 1)}
    for part in lam:
        counts[width] += part // width
        f = part % width
        if f:
            counts[f] += 1
    out = []
    for v in range(width, 0, -1):
        out.extend([v] * counts[v])
    return tuple(out)


def max_type_inverse(ltype: Sequence[int], low: int, gap: int) -> tuple[int, ...]:
    """Recover lam from max_type(lam, gap) when all parts of lam lie in
    [low, low + gap]."""
    ltype = check_partition(ltype) if ltype else ()
    width = gap + 1
    if any(v > width for v in ltype):
        raise ValueError(f"parts of {ltype} exceed {width}")
    full = ltype.count(width)
    parts = []
    for f in range(1, width):
        cnt = sum(1 for v in ltype if v == f)
        if cnt == 0:
            continue
        candidates = [v for v in range(low, low + gap + 1) if v % width == f]
        if len(candidates) != 1:
            raise ValueError("window does not determine the part")
        part = candidates[0]
        parts.extend([part] * cnt)
        full -= cnt * (part // width)
    if full < 0:
        raise ValueError("inconsistent type: too few full-width dominoes")
    if full:
        candidates = [v for v in range(low, low + gap + 1) if v % width == 0]
        if len(candidates) != 1:
            raise ValueError("window does not determine the full-width part")
        part = candidates[0]
        if part == 0 or (full * width) % part:
            raise ValueError("full-width dominoes do not split into parts")
        parts.extend([part] * ((full * width) // part))
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# one-variable q-utilities (tables with s pinned to 0)


def _one_var(entries: dict[int, int], trunc=None) -> SeriesTable:
    return SeriesTable({(d, 0): c for d, c in entries.items()}, trunc)


def rising_factorial(j: int) -> SeriesTable:
    """(q)_j = (1 - q)(1 - q^2)...(1 - q^j) as a signed polynomial table."""
    if j < 0:
        raise ValueError("negative index")
    out = SeriesTable.one()
    for i in range(1, j + 1):
        out = out * _one_var({0: 1, i: -1})
    return out


def inverse_rising_series(j: int, bound: int) -> SeriesTable:
    """Power series of 1/(q)_j up to degree bound: partitions with parts <= j."""
    counts = [1] + [0] * bound
    for part in range(1, j + 1):
        for d in range(part, bound + 1):
            counts[d] += counts[d - part]
    return _one_var({d: c for d, c in enumerate(counts)}, trunc=(bound, 0))


def gaussian_binomial(n: int, k: int) -> SeriesTable:
    """The q-binomial coefficient as a nonnegative polynomial table.

    Computed by exact division of rising factorial products; a nonzero
    remainder would signal an arithmetic bug and raises.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = rising_factorial(n)
    den = rising_factorial(k) * rising_factorial(n - k)
    quot = _poly_divide_one_var(num, den)
    if any(c < 0 for c in quot.entries.values()):
        raise AssertionError("q-binomial with a negative coefficient")
    return quot


def _poly_divide_one_var(num: SeriesTable, den: SeriesTable) -> SeriesTable:
    nd = {r: c for (r, s), c in num.entries.items()}
    dd = {r: c for (r, s), c in den.entries.items()}
    if not dd:
        raise ZeroDivisionError("division by the zero table")
    dmax = max(dd)
    lead = dd[dmax]
    quot: dict[int, int] = {}
    work = dict(nd)
    while work:
        top = max(work)
        if top < dmax:
            raise AssertionError("inexact polynomial division")
        c, rem = divmod(work[top], lead)
        if rem:
            raise AssertionError("inexact polynomial division")
        quot[top - dmax] = c
        for d, dc in dd.items():
            nd_ = work.get(top - dmax + d, 0) - c * dc
            if nd_:
                work[top - dmax + d] = nd_
            else:
                work.pop(top - dmax + d, None)
    return _one_var(quot)


def qt_utilities(kind: str, *args) -> SeriesTable:
    """Dispatch: ('rising', j), ('rising-inverse', j, bound), ('gauss', n, k)."""
    if kind == "rising":
        return rising_factorial(*args)
    if kind == "rising-inverse":
        return inverse_rising_series(*args)
    if kind == "gauss":
        return gaussian_binomial(*args)
    raise ValueError(f"unknown kind {kind!r}")
