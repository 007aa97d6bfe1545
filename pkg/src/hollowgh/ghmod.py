"""Ideals, bases, Hilbert series and character data of a hollow module.

The quotient by the annihilator of the diagram determinant is represented
concretely by the span of all partial derivatives of that determinant, so
every structural claim here reduces to an exact rank computation over the
rationals.  Nothing in this module is approximate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterator, Optional, Sequence

from .bitab import build
from .exactlinalg import RowReducer, rank_of_rows, rref_basis
from .exactpoly import SparsePoly, apply_diff
from .latticediag import HollowGamma, delta
from .symfun import (
    SeriesTable,
    complete,
    complete_product,
    elementary,
    elementary_product,
    gaussian_binomial,
    inverse_rising_series,
)
from .tableaux import (
    Filling,
    ResourceCapError,
    cocharge_diagram,
    enumerate_syt,
    partitions_of,
)

IDEAL_LEVELS = ("monomials", "elementary", "complete", "complete_all")


def _level_index(level: str) -> int:
    if level not in IDEAL_LEVELS:
        raise ValueError(f"level must be one of {IDEAL_LEVELS}, got {level!r}")
    return IDEAL_LEVELS.index(level)


def ideal_generators(gamma: HollowGamma, level: str) -> list[SparsePoly]:
    """Generators of the nested annihilator approximations.

    'monomials': x_i y_i plus all square-free x-products on m1+p1+1 indices
    and y-products on m2+p2+1 indices.  'elementary' adds the window of
    elementary symmetric polynomials that must displace an attached cell.
    'complete' adds the complete symmetric window h_{k..k+p} on each side;
    'complete_all' extends those windows to the bidegree of the diagram
    determinant (higher ones act as zero on it anyway).
    """
    idx = _level_index(level)
    n = gamma.n
    gens: list[SparsePoly] = []
    from itertools import combinations

    for i in range(1, n + 1):
        gens.append(
            SparsePoly.variable(n, "x", i) * SparsePoly.variable(n, "y", i)
        )
    for size, which in ((gamma.m1 + gamma.p1 + 1, "x"), (gamma.m2 + gamma.p2 + 1, "y")):
        for subset in combinations(range(1, n + 1), size):
            poly = SparsePoly.one(n)
            for i in subset:
                poly = poly * SparsePoly.variable(n, which, i)
            gens.append(poly)
    if idx >= 1:
        for j in range(gamma.p1 + 2, gamma.p1 + gamma.m1 + 1):
            gens.append(elementary(j, n, "x"))
        for j in range(gamma.p2 + 2, gamma.p2 + gamma.m2 + 1):
            gens.append(elementary(j, n, "y"))
    if idx >= 2:
        d1, d2 = _delta_bidegree(gamma)
        top1 = gamma.k1 + gamma.p1 if idx == 2 else max(gamma.k1 + gamma.p1, d1)
        top2 = gamma.k2 + gamma.p2 if idx == 2 else max(gamma.k2 + gamma.p2, d2)
        for j in range(gamma.k1, top1 + 1):
            gens.append(complete(j, n, "x"))
        for j in range(gamma.k2, top2 + 1):
            gens.append(complete(j, n, "y"))
    return gens


def _delta_bidegree(gamma: HollowGamma) -> tuple[int, int]:
    cells = gamma.cells()
    return sum(a for a, b in cells), sum(b for a, b in cells)


# ---------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class BasisElement:
    """A tagged generator of one of the module bases.

    kind 'biperm' is a bare bipermanent [T, V] with V a cocharge diagram;
    'h_extended' multiplies by h_q(X) h_q'(Y) over nonincreasing tuples;
    'e_extended' multiplies by products of small elementary symmetric
    functions with the given exponent vectors.
    """

    kind: str
    tableau: Filling
    cochg: Filling
    hx: tuple[int, ...] = ()
    hy: tuple[int, ...] = ()
    ex: tuple[int, ...] = ()
    ey: tuple[int, ...] = ()

    def stats(self) -> tuple[int, int]:
        """Coordinate sums (|X|, |Y|) of the cocharge filling's entries."""
        xs = sum(e[0] for e in self.cochg.row_sequence())
        ys = sum(e[1] for e in self.cochg.row_sequence())
        return xs, ys

    def bidegree(self) -> tuple[int, int]:
        xs, ys = self.stats()
        xs += sum(self.hx) + sum((i + 1) * e for i, e in enumerate(self.ex))
        ys += sum(self.hy) + sum((i + 1) * e for i, e in enumerate(self.ey))
        return xs, ys

    def poly(self, n: int) -> SparsePoly:
        out = build("per", self.tableau, self.cochg).value
        if self.hx:
            out = out * complete_product(self.hx, n, "x")
        if self.hy:
            out = out * complete_product(self.hy, n, "y")
        for i, e in enumerate(self.ex):
            for _ in range(e):
                out = out * elementary(i + 1, n, "x")
        for i, e in enumerate(self.ey):
            for _ in range(e):
                out = out * elementary(i + 1, n, "y")
        return out

    def render(self) -> str:
        parts = [f"[{self.tableau.render()} | {self.cochg.render()}]"]
        if self.hx or self.hy:
            parts.append(f"hx={','.join(map(str, self.hx)) or '-'}")
            parts.append(f"hy={','.join(map(str, self.hy)) or '-'}")
        if any(self.ex) or any(self.ey):
            parts.append(f"ex={','.join(map(str, self.ex)) or '-'}")
            parts.append(f"ey={','.join(map(str, self.ey)) or '-'}")
        return " ".join(parts)


def nonincreasing_tuples(bound: int, length: int) -> Iterator[tuple[int, ...]]:
    """All nonincreasing tuples of the given length with entries in 0..bound."""
    if length == 0:
        yield ()
        return
    for first in range(bound, -1, -1):
        for rest in nonincreasing_tuples(first, length - 1):
            yield (first,) + rest


def _biperm_pairs(gamma: HollowGamma, cap_n: int) -> list[tuple[Filling, Filling]]:
    if gamma.n > cap_n:
        raise ResourceCapError(f"n = {gamma.n} exceeds cap {cap_n}")
    pairs = []
    for u in enumerate_syt(n=gamma.n, cap=cap_n):
        v = cocharge_diagram(gamma, u)
        for t in enumerate_syt(shape=u.shape, cap=cap_n):
            pairs.append((t, v))
    return pairs


def basis(
    gamma: HollowGamma,
    kind: str = "biperm",
    bound: Optional[tuple[int, int]] = None,
    cap_n: int = 6,
    cap_basis: int = 2000,
) -> list[BasisElement]:
    """The requested basis, deduplicated and in a deterministic order."""
    pairs = _biperm_pairs(gamma, cap_n)
    out: list[BasisElement] = []
    if kind == "biperm":
        out = [BasisElement("biperm", t, v) for t, v in pairs]
    elif kind == "h_extended":
        hxs = list(nonincreasing_tuples(gamma.k1 - 1, gamma.p1 + 1))
        hys = list(nonincreasing_tuples(gamma.k2 - 1, gamma.p2 + 1))
        expected = len(pairs) * len(hxs) * len(hys)
        if expected > cap_basis:
            raise ResourceCapError(f"basis size {expected} exceeds cap {cap_basis}")
        for t, v in pairs:
            for hx in hxs:
                for hy in hys:
                    out.append(BasisElement("h_extended", t, v, hx=hx, hy=hy))
    elif kind == "e_extended":
        if bound is None:
            raise ValueError("e_extended needs a bidegree bound")
        r_max, s_max = bound
        for t, v in pairs:
            xs, ys = BasisElement("biperm", t, v).stats()
            for ex in _weighted_exponents(gamma.m1 + gamma.p1, r_max - xs):
                for ey in _weighted_exponents(gamma.m2 + gamma.p2, s_max - ys):
                    out.append(BasisElement("e_extended", t, v, ex=ex, ey=ey))
                    if len(out) > cap_basis:
                        raise ResourceCapError(
                            f"basis size exceeds cap {cap_basis} under bound {bound}"
                        )
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    out.sort(key=lambda e: e.render())
    return out


def _weighted_exponents(nfuncs: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors (e_1..e_nfuncs) with sum i*e_i at most budget."""
    if budget < 0:
        return
    if nfuncs == 0:
        yield ()
        return
    for last in range(0, budget // nfuncs + 1):
        for head in _weighted_exponents(nfuncs - 1, budget - nfuncs * last):
            yield head + (last,)


def biperm_stat_table(gamma: HollowGamma, cap_n: int = 6) -> SeriesTable:
    """Sum of t^|X| q^|Y| over the bipermanent basis."""
    entries: dict[tuple[int, int], int] = {}
    for t, v in _biperm_pairs(gamma, cap_n):
        xs = sum(e[0] for e in v.row_sequence())
        ys = sum(e[1] for e in v.row_sequence())
        entries[(xs, ys)] = entries.get((xs, ys), 0) + 1
    return SeriesTable(entries)


# ---------------------------------------------------------------------------
# Hilbert series


def harmonic_series(gamma: HollowGamma, cap_n: int = 6) -> SeriesTable:
    """Bigraded dimensions of the span of all derivatives of the determinant.

    This is the brute-force oracle: per bidegree, the exact rank of the
    matrix of all partial derivatives of the diagram determinant.
    """
    if gamma.n > cap_n:
        raise ResourceCapError(f"n = {gamma.n} exceeds cap {cap_n}")
    dlt = delta(gamma.cells(), cap=max(cap_n, 7))
    d1, d2 = dlt.bidegree()
    n = gamma.n
    entries = {}
    for r in range(d1 + 1):
        for s in range(d2 + 1):
            red = RowReducer()
            limit = _monomial_count(n, r, s)
            for mono in _monomials_of_bidegree(n, d1 - r, d2 - s):
                row = apply_diff(SparsePoly.from_monomial(n, mono), dlt)
                if row.terms and red.insert(row.terms):
                    if red.rank == limit:
                        break
            if red.rank:
                entries[(r, s)] = red.rank
    return SeriesTable(entries)


def _monomial_count(n: int, r: int, s: int) -> int:
    from math import comb

    return comb(r + n - 1, n - 1) * comb(s + n - 1, n - 1)


def _monomials_of_bidegree(n: int, r: int, s: int):
    for xexp in _compositions_tuple(r, n):
        for yexp in _compositions_tuple(s, n):
            yield (xexp, yexp)


@cache
def _compositions_tuple(total: int, parts: int) -> tuple:
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total + 1):
        for rest in _compositions_tuple(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def hilbert_closed(
    gamma: HollowGamma,
    level: str = "complete",
    trunc: Optional[tuple[int, int]] = None,
    cap_n: int = 6,
) -> SeriesTable:
    """Closed-form Hilbert series of the quotient at the given level.

    'complete' (= the full module) multiplies the bipermanent statistic sum
    by two Gaussian binomial factors and is exact and finite.  'monomials'
    and 'elementary' have rising-factorial denominators and need a
    truncation bidegree.
    """
    stats = biperm_stat_table(gamma, cap_n)
    if level in ("complete", "complete_all"):
        gx = gaussian_binomial(gamma.p1 + gamma.k1, gamma.p1 + 1)
        gq = _swap_axes(gaussian_binomial(gamma.p2 + gamma.k2, gamma.p2 + 1))
        return gx * gq * stats
    if trunc is None:
        raise ValueError(f"level {level!r} is an infinite series; pass trunc")
    r_max, s_max = trunc
    if level == "monomials":
        fx = inverse_rising_series(gamma.m1 + gamma.p1, r_max)
        fy = _swap_axes(inverse_rising_series(gamma.m2 + gamma.p2, s_max))
    elif level == "elementary":
        fx = inverse_rising_series(gamma.p1 + 1, r_max)
        fy = _swap_axes(inverse_rising_series(gamma.p2 + 1, s_max))
    else:
        raise ValueError(f"no closed series at level {level!r}")
    fy.trunc = (r_max, s_max)
    fx.trunc = (r_max, s_max)
    return (fx * fy * stats).truncate((r_max, s_max))


def _swap_axes(table: SeriesTable) -> SeriesTable:
    out = SeriesTable({(s, r): c for (r, s), c in table.entries.items()})
    if table.trunc is not None:
        out.trunc = (table.trunc[1], table.trunc[0])
    return out


def quotient_series(
    gamma: HollowGamma, level: str, trunc: tuple[int, int], cap_n: int = 6
) -> SeriesTable:
    """Rank oracle: dimensions of (ring / generator span) per bidegree.

    For each bidegree up to trunc, the dimension is the number of monomials
    minus the exact rank of all products (generator * monomial) landing in
    that bidegree.
    """
    if gamma.n > cap_n:
        raise ResourceCapError(f"n = {gamma.n} exceeds cap {cap_n}")
    n = gamma.n
    gens = ideal_generators(gamma, level)
    r_max, s_max = trunc
    entries = {}
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            red = RowReducer()
            for g in gens:
                if g.is_zero():
                    continue
                gr, gs = g.bidegree()
                if gr > r or gs > s:
                    continue
                for mono in _monomials_of_bidegree(n, r - gr, s - gs):
                    row = g * SparsePoly.from_monomial(n, mono)
                    red.insert(row.terms)
            dim = _monomial_count(n, r, s) - red.rank
            if dim:
                entries[(r, s)] = dim
    return SeriesTable(entries, trunc=trunc)


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class BidegreeRow:
    bidegree: tuple[int, int]
    count: int
    rank: int
    harmonic_dim: int

    @property
    def ok(self) -> bool:
        return self.count == self.rank == self.harmonic_dim


@dataclass
class IndependenceReport:
    gamma: HollowGamma
    size: int
    rank: int
    rows: list[BidegreeRow]
    dependent: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.rank == self.size and all(row.ok for row in self.rows)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma.render(),
            "check": "independence",
            "size": self.size,
            "rank": self.rank,
            "bidegrees": [
                {
                    "bidegree": list(row.bidegree),
                    "count": row.count,
                    "rank": row.rank,
                    "harmonic": row.harmonic_dim,
                }
                for row in sorted(self.rows, key=lambda r: r.bidegree)
            ],
            "dependent": self.dependent,
            "pass": self.passed,
        }


def verify_independence(
    gamma: HollowGamma, cap_n: int = 6, cap_basis: int = 2000
) -> IndependenceReport:
    """Apply every extended-basis element as a differential operator to the
    diagram determinant and certify full rank, bidegree by bidegree."""
    elements = basis(gamma, "h_extended", cap_n=cap_n, cap_basis=cap_basis)
    n = gamma.n
    dlt = delta(gamma.cells(), cap=max(cap_n, 7))
    d1, d2 = dlt.bidegree()
    harm = harmonic_series(gamma, cap_n=cap_n)

    base_cache: dict = {}
    groups: dict[tuple[int, int], list] = {}
    for elem in elements:
        key = (elem.tableau, elem.cochg)
        if key not in base_cache:
            per = build("per", elem.tableau, elem.cochg).value
            base_cache[key] = apply_diff(per, dlt)
        op = SparsePoly.one(n)
        if elem.hx:
            op = op * complete_product(elem.hx, n, "x")
        if elem.hy:
            op = op * complete_product(elem.hy, n, "y")
        image = apply_diff(op, base_cache[key])
        groups.setdefault(elem.bidegree(), []).append((elem, image))

    rows = []
    total_rank = 0
    dependent: list[str] = []
    for bideg, members in sorted(groups.items()):
        red = RowReducer()
        dep_here = []
        for elem, image in members:
            if image.is_zero() or not red.insert(image.terms):
                dep_here.append(elem.render())
        mirror = (d1 - bideg[0], d2 - bideg[1])
        rows.append(
            BidegreeRow(
                bidegree=bideg,
                count=len(members),
                rank=red.rank,
                harmonic_dim=harm.coeff(*mirror),
            )
        )
        total_rank += red.rank
        if dep_here:
            dependent.extend(dep_here)
    return IndependenceReport(
        gamma=gamma, size=len(elements), rank=total_rank, rows=rows, dependent=dependent
    )


@dataclass
class AnnihilationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AnnihilationReport:
    gamma: HollowGamma
    checks: list[AnnihilationCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma.render(),
            "check": "annihilation",
            "items": [
                {"name": c.name, "pass": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "pass": self.passed,
        }


def annihilation_check(gamma: HollowGamma, cap_n: int = 6) -> AnnihilationReport:
    """Verify the annihilation and slide identities exactly.

    All monomial, elementary and complete generators must kill the
    determinant; the small complete operators must slide the innermost
    detached cell with a positive constant; the window-and-above complete
    operators must give zero.
    """
    if gamma.n > cap_n:
        raise ResourceCapError(f"n = {gamma.n} exceeds cap {cap_n}")
    n = gamma.n
    dlt = delta(gamma.cells(), cap=max(cap_n, 7))
    d1, d2 = dlt.bidegree()
    checks: list[AnnihilationCheck] = []

    gen_lists = {
        "monomials": ideal_generators(gamma, "monomials"),
        "elementary": ideal_generators(gamma, "elementary"),
        "complete": ideal_generators(gamma, "complete"),
    }
    seen: set = set()
    for level in ("monomials", "elementary", "complete"):
        gens = [g for g in gen_lists[level] if not g.is_zero()]
        fresh = [g for g in gens if g.render() not in seen]
        seen.update(g.render() for g in fresh)
        bad = sum(1 for g in fresh if not apply_diff(g, dlt).is_zero())
        checks.append(
            AnnihilationCheck(
                name=f"{level} generators annihilate",
                passed=bad == 0,
                detail=f"{len(fresh) - bad}/{len(fresh)} generators",
            )
        )

    for which, k, maxdeg in (("x", gamma.k1, d1), ("y", gamma.k2, d2)):
        for j in range(0, k):
            lhs = apply_diff(complete(j, n, which), dlt)
            if which == "x":
                slid = gamma.bracket_cells((), (j,))
            else:
                slid = gamma.bracket_cells((j,), ())
            rhs = delta(slid, cap=max(cap_n, 7))
            const = _proportionality(lhs, rhs)
            ok = const is not None and const > 0
            checks.append(
                AnnihilationCheck(
                    name=f"h_{j}(d{which}) slides the detached {'arm' if which == 'x' else 'leg'}",
                    passed=ok,
                    detail=f"constant {const}" if ok else "not proportional",
                )
            )
        top = maxdeg - k + 1
        bad = []
        for i in range(0, max(top, 1)):
            if not apply_diff(complete(k + i, n, which), dlt).is_zero():
                bad.append(k + i)
        checks.append(
            AnnihilationCheck(
                name=f"h_{{{k}+i}}(d{which}) annihilates",
                passed=not bad,
                detail=f"degrees {k}..{k + max(top, 1) - 1}"
                if not bad
                else f"survivors at {bad}",
            )
        )
    return AnnihilationReport(gamma=gamma, checks=checks)


def _proportionality(lhs: SparsePoly, rhs: SparsePoly) -> Optional[Fraction]:
    """The constant c with lhs = c * rhs, or None."""
    if rhs.is_zero():
        return None
    mono, coeff = next(iter(rhs.terms.items()))
    c = Fraction(lhs.terms.get(mono, 0), 1) / coeff
    return c if lhs == rhs.scale(c) else None


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama) and the graded character


@cache
def sn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible character value chi^lam on the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(
            v - (len(new_beta) - 1 - i) for i, v in enumerate(new_beta)
        )
        new_lam = tuple(v for v in new_lam if v > 0)
        total += (-1) ** jumped * sn_character(new_lam, rest)
    return total


def conjugacy_class_size(mu: Sequence[int], n: int) -> int:
    z = 1
    for v in set(mu):
        m = list(mu).count(v)
        z *= v**m * factorial(m)
    return factorial(n) // z


def _class_representative(mu: Sequence[int], n: int) -> list[int]:
    """One-line permutation (1-based) with cycle type mu."""
    sigma = list(range(n + 1))
    start = 1
    for part in mu:
        for i in range(start, start + part - 1):
            sigma[i] = i + 1
        sigma[start + part - 1] = start
        start += part
    return sigma


def _permute_monomial(mono, sigma):
    (xexp, yexp) = mono
    n = len(xexp)
    nx = [0] * n
    ny = [0] * n
    for i in range(n):
        nx[sigma[i + 1] - 1] = xexp[i]
        ny[sigma[i + 1] - 1] = yexp[i]
    return (tuple(nx), tuple(ny))


def graded_character(
    gamma: HollowGamma, mode: str = "formula", cap_n: int = 6, brute_cap: int = 5
) -> dict[tuple[int, ...], SeriesTable]:
    """Multiplicity tables of each irreducible in the full module.

    'formula' multiplies the per-shape cocharge statistic sums by the two
    Gaussian factors.  'bruteforce' decomposes the derivative span by exact
    traces of the diagonal symmetric group action, bidegree by bidegree.
    """
    n = gamma.n
    if mode == "formula":
        if n > cap_n:
            raise ResourceCapError(f"n = {n} exceeds cap {cap_n}")
        gx = gaussian_binomial(gamma.p1 + gamma.k1, gamma.p1 + 1)
        gq = _swap_axes(gaussian_binomial(gamma.p2 + gamma.k2, gamma.p2 + 1))
        out = {}
        for lam in partitions_of(n):
            entries: dict[tuple[int, int], int] = {}
            for t in enumerate_syt(shape=lam, cap=cap_n):
                v = cocharge_diagram(gamma, t)
                xs = sum(e[0] for e in v.row_sequence())
                ys = sum(e[1] for e in v.row_sequence())
                entries[(xs, ys)] = entries.get((xs, ys), 0) + 1
            out[lam] = gx * gq * SeriesTable(entries)
        return out
    if mode != "bruteforce":
        raise ValueError(f"mode must be 'formula' or 'bruteforce', got {mode!r}")
    if n > brute_cap:
        raise ResourceCapError(f"n = {n} exceeds brute-force cap {brute_cap}")

    dlt = delta(gamma.cells(), cap=max(cap_n, 7))
    d1, d2 = dlt.bidegree()
    classes = list(partitions_of(n))
    reps = {mu: _class_representative(mu, n) for mu in classes}
    sizes = {mu: conjugacy_class_size(mu, n) for mu in classes}
    lams = list(partitions_of(n))
    mult: dict[tuple[int, ...], dict[tuple[int, int], int]] = {lam: {} for lam in lams}

    for r in range(d1 + 1):
        for s in range(d2 + 1):
            rows = []
            for mono in _monomials_of_bidegree(n, d1 - r, d2 - s):
                row = apply_diff(SparsePoly.from_monomial(n, mono), dlt)
                if row.terms:
                    rows.append(row.terms)
            if not rows:
                continue
            pivots, basis_rows = rref_basis(rows)
            if not pivots:
                continue
            traces = {}
            for mu in classes:
                sigma = reps[mu]
                tr = Fraction(0)
                for piv, vec in zip(pivots, basis_rows):
                    moved = {_permute_monomial(m, sigma): c for m, c in vec.items()}
                    tr += moved.get(piv, 0)
                traces[mu] = tr
            for lam in lams:
                acc = Fraction(0)
                for mu in classes:
                    acc += sizes[mu] * sn_character(lam, mu) * traces[mu]
                acc /= factorial(n)
                if acc.denominator != 1:
                    raise AssertionError(
                        f"non-integer multiplicity {acc} at bidegree {(r, s)}"
                    )
                if acc < 0:
                    raise AssertionError(
                        f"negative multiplicity {acc} at bidegree {(r, s)}"
                    )
                if acc:
                    mult[lam][(r, s)] = int(acc)
    return {lam: SeriesTable(table) for lam, table in mult.items()}
