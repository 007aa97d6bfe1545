"""Exact sparse polynomials in the 2n variables x_1..x_n, y_1..y_n.

Coefficients are exact rationals (``fractions.Fraction`` over Python's
arbitrary-precision integers); there is no floating point anywhere.
A monomial is a pair of exponent tuples ``(xexp, yexp)``, each of length
n.  Polynomials are immutable once built and all operations are pure, so
values can be shared freely across threads or worker processes.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


Monomial = tuple[tuple[int, ...], tuple[int, ...]]


def monomial_bidegree(mono: Monomial) -> tuple[int, int]:
    xexp, yexp = mono
    return sum(xexp), sum(yexp)


def _falling(base: int, k: int) -> int:
    """base * (base-1) * ... * (base-k+1); zero when k > base."""
    if k > base:
        return 0
    return factorial(base) // factorial(base - k)


class SparsePoly:
    """A polynomial stored as a map from monomials to nonzero coefficients.

    ``nvars`` is the number n of x-variables (and of y-variables); it is
    carried explicitly and operations on mismatched n raise rather than
    auto-extend.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    xexp, yexp = mono
                    if len(xexp) != nvars or len(yexp) != nvars:
                        raise ValueError(
                            f"monomial {mono} does not have {nvars} x- and y-exponents"
                        )
                    clean[(tuple(xexp), tuple(yexp))] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        zero = (0,) * nvars
        return cls(nvars, {(zero, zero): Fraction(c)})

    @classmethod
    def from_monomial(cls, nvars: int, mono: Monomial, coeff=1) -> "SparsePoly":
        return cls(nvars, {mono: Fraction(coeff)})

    @classmethod
    def variable(cls, nvars: int, which: str, index: int) -> "SparsePoly":
        """The variable x_index or y_index (1-based index)."""
        if which not in ("x", "y"):
            raise ValueError("which must be 'x' or 'y'")
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exp = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        zero = (0,) * nvars
        mono = (exp, zero) if which == "x" else (zero, exp)
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def axis_power(cls, nvars: int, index: int, cell: tuple[int, int]) -> "SparsePoly":
        """x_index^a * y_index^b for a cell (a, b); 1-based index."""
        a, b = cell
        if a < 0 or b < 0:
            raise ValueError(f"cell {cell} has a negative coordinate")
        xexp = tuple(a if i == index - 1 else 0 for i in range(nvars))
        yexp = tuple(b if i == index - 1 else 0 for i in range(nvars))
        return cls(nvars, {(xexp, yexp): Fraction(1)})

    # -- ring operations ------------------------------------------------

    def _check(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"polynomials over different variable counts: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return SparsePoly(self.nvars, terms)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                mono = (
                    tuple(u + v for u, v in zip(xa, xb)),
                    tuple(u + v for u, v in zip(ya, yb)),
                )
                s = terms.get(mono, 0) + ca * cb
                if s == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        if c == 0:
            return SparsePoly.zero(self.nvars)
        return SparsePoly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- grading ---------------------------------------------------------

    def bigraded_component(self, r: int, s: int) -> "SparsePoly":
        """Sum of the terms of total x-degree exactly r and y-degree exactly s."""
        if r < 0 or s < 0:
            raise ValueError("bidegree components are indexed by nonnegative pairs")
        return SparsePoly(
            self.nvars,
            {m: c for m, c in self.terms.items() if monomial_bidegree(m) == (r, s)},
        )

    def bidegrees(self) -> set[tuple[int, int]]:
        return {monomial_bidegree(m) for m in self.terms}

    def bidegree(self) -> tuple[int, int]:
        """The common bidegree of a nonzero bihomogeneous polynomial."""
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not bihomogeneous")
        return next(iter(degs))

    # -- differential operators -------------------------------------------

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self.render()!r})"

    def render(self) -> str:
        """Deterministic text form: terms sorted by exponent vectors."""
        if not self.terms:
            return "0"
        parts = []
        for (xexp, yexp) in sorted(self.terms):
            c = self.terms[(xexp, yexp)]
            factors = []
            for i, e in enumerate(xexp):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            for i, e in enumerate(yexp):
                if e == 1:
                    factors.append(f"y{i + 1}")
                elif e > 1:
                    factors.append(f"y{i + 1}^{e}")
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


def apply_diff(op: SparsePoly, target: SparsePoly) -> SparsePoly:
    """Apply op, read as a polynomial in d/dx_i and d/dy_i, to target.

    Each term c * x^a y^b of op acts as c * (d/dx)^a (d/dy)^b; factors are
    exact integer falling factorials.  Over-differentiation yields zero
    terms which are pruned.
    """
    op._check(target)
    n = op.nvars
    terms: dict[Monomial, Fraction] = {}
    for (dx, dy), c_op in op.terms.items():
        for (tx, ty), c_t in target.terms.items():
            coeff = c_op * c_t
            ok = True
            for e, d in zip(tx, dx):
                if d:
                    f = _falling(e, d)
                    if f == 0:
                        ok = False
                        break
                    coeff *= f
            if not ok:
                continue
            for e, d in zip(ty, dy):
                if d:
                    f = _falling(e, d)
                    if f == 0:
                        ok = False
                        break
                    coeff *= f
            if not ok:
                continue
            mono = (
                tuple(e - d for e, d in zip(tx, dx)),
                tuple(e - d for e, d in zip(ty, dy)),
            )
            s = terms.get(mono, 0) + coeff
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
    return SparsePoly(n, terms)
