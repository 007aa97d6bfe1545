"""Partitions, filled diagrams, standardization, cocharge and bitableau orders.

Diagrams follow the French convention: row 0 is the bottom row and cells
are addressed (row, col), both 0-based.  Three entry alphabets appear:

* plain nonnegative integers (standard tableaux use 1..n);
* axis cells (a, 0) and (0, b), written here as signed integers
  a and -b in text form, with (0, 0) rendered as 0;
* arbitrary pairs (a, b) of nonnegative integers.

A pair (a1, b1) precedes (a2, b2) when a1 - b1 < a2 - b2, with ties broken
by a1 < a2.  Restricted to axis cells this is the signed-integer order
..., (0,2), (0,1), (0,0), (1,0), (2,0), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence, Union


Entry = Union[int, tuple[int, int]]
Pair = tuple[int, int]


class ResourceCapError(Exception):
    """Raised when an enumeration exceeds its configured size cap."""


# ---------------------------------------------------------------------------
# alphabet helpers


def pair_key(p: Pair) -> tuple[int, int]:
    a, b = p
    return (a - b, a)


def entry_key(e: Entry):
    """Sort key valid within one alphabet (ints, or pairs under pair_key)."""
    if isinstance(e, tuple):
        return pair_key(e)
    return (e, e)


def is_axis(p: Pair) -> bool:
    a, b = p
    return a >= 0 and b >= 0 and (a == 0 or b == 0)


def axis_cell(v: int) -> Pair:
    """Signed integer to axis cell: v >= 0 gives (v, 0), v < 0 gives (0, -v)."""
    return (v, 0) if v >= 0 else (0, -v)


def axis_value(p: Pair) -> int:
    if not is_axis(p):
        raise ValueError(f"{p} is not an axis cell")
    a, b = p
    return a if b == 0 else -b


def axis_sub(u: Pair, c: Pair) -> Pair:
    """Componentwise difference of axis cells, required to stay on an axis."""
    d = (u[0] - c[0], u[1] - c[1])
    if not is_axis(d):
        raise ValueError(f"difference {u} - {c} = {d} leaves the axis alphabet")
    return d


def axis_add(c: Pair, a: Pair) -> Pair:
    s = (c[0] + a[0], c[1] + a[1])
    if not is_axis(s):
        raise ValueError(f"sum {c} + {a} = {s} leaves the axis alphabet")
    return s


def compare_alphabet(u: Pair, v: Pair) -> int:
    """Three-way comparison of alphabet pairs; negative means u precedes v."""
    ku, kv = pair_key(u), pair_key(v)
    return -1 if ku < kv else (0 if ku == kv else 1)


def render_entry(e: Entry) -> str:
    if isinstance(e, tuple):
        if is_axis(e):
            return str(axis_value(e))
        return f"({e[0]},{e[1]})"
    return str(e)


def parse_entry(tok: str) -> Entry:
    tok = tok.strip()
    if tok.startswith("("):
        if not tok.endswith(")"):
            raise ValueError(f"unbalanced parentheses in entry {tok!r}")
        a, b = tok[1:-1].split(",")
        return (int(a), int(b))
    v = int(tok)
    return v


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        p > 0 for p in parts
    )


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition (weakly decreasing, positive)")
    return parts


def transpose_partition(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n in decreasing lexicographic order."""

    def rec(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape (hook length formula)."""
    shape = check_partition(shape)
    t = transpose_partition(shape)
    n = sum(shape)
    from math import factorial

    num = factorial(n)
    for i, row in enumerate(shape):
        for j in range(row):
            num //= (row - j) + (t[j] - i) - 1
    return num


# ---------------------------------------------------------------------------
# filled diagrams


class Filling:
    """An assignment of entries to the cells of a Ferrers diagram.

    Rows are stored bottom-first as a tuple of tuples.  Entries may be
    integers or alphabet pairs, but a single filling uses one alphabet.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[Entry]]):
        self.rows = tuple(tuple(row) for row in rows)
        shape = tuple(len(row) for row in self.rows)
        if not shape or not is_partition(shape):
            raise ValueError(f"row lengths {shape} do not form a partition")
        self.shape = shape

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entry(self, row: int, col: int) -> Entry:
        return self.rows[row][col]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self.rows):
            for c in range(len(row)):
                yield (r, c)

    def transpose(self) -> "Filling":
        """Reflect across the diagonal; entries travel with their cells."""
        t_shape = transpose_partition(self.shape)
        return Filling(
            tuple(
                tuple(self.rows[r][c] for r in range(t_shape[c]))
                for c in range(len(t_shape))
            )
        )

    def row_sequence(self) -> tuple[Entry, ...]:
        """Entries read left to right along rows, bottom row first."""
        return tuple(e for row in self.rows for e in row)

    def column_sequence(self) -> tuple[Entry, ...]:
        """Entries read bottom to top up columns, leftmost column first."""
        out = []
        for c in range(self.shape[0]):
            for r in range(len(self.rows)):
                if c < len(self.rows[r]):
                    out.append(self.rows[r][c])
        return tuple(out)

    def content(self) -> tuple[Entry, ...]:
        """The row sequence rearranged into nondecreasing alphabet order."""
        return tuple(sorted(self.row_sequence(), key=entry_key))

    def is_column_strict(self) -> bool:
        """Rows weakly increase left to right; columns strictly increase upward."""
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if entry_key(a) > entry_key(b):
                    return False
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                if entry_key(self.rows[r][c]) >= entry_key(self.rows[r + 1][c]):
                    return False
        return True

    def is_injective(self) -> bool:
        seq = self.row_sequence()
        return len(set(seq)) == len(seq)

    def is_standard(self) -> bool:
        return (
            all(isinstance(e, int) for e in self.row_sequence())
            and sorted(self.row_sequence()) == list(range(1, self.size + 1))
            and self.is_column_strict()
        )

    def position_of(self, value: Entry) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                if e == value:
                    return (r, c)
        raise ValueError(f"entry {value} not present")

    def with_entries(self, mapping) -> "Filling":
        return Filling(tuple(tuple(mapping(e) for e in row) for row in self.rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Filling({self.render()!r})"

    def render(self) -> str:
        return ";".join(",".join(render_entry(e) for e in row) for row in self.rows)

    @classmethod
    def parse(cls, text: str, axis: bool = False) -> "Filling":
        """Inverse of render.  With axis=True, integer tokens become axis cells."""
        rows = []
        for row_text in text.split(";"):
            row: list[Entry] = []
            depth = 0
            token = ""
            for ch in row_text + ",":
                if ch == "," and depth == 0:
                    if token.strip():
                        e = parse_entry(token)
                        if axis and isinstance(e, int):
                            e = axis_cell(e)
                        row.append(e)
                    token = ""
                else:
                    if ch == "(":
                        depth += 1
                    elif ch == ")":
                        depth -= 1
                    token += ch
            rows.append(tuple(row))
        return cls(rows)


@dataclass(frozen=True)
class Bitableau:
    """A shape-matched pair: an integer-filled left diagram and a pair-filled right."""

    left: Filling
    right: Filling

    def __post_init__(self):
        if self.left.shape != self.right.shape:
            raise ValueError(
                f"shape mismatch {self.left.shape} vs {self.right.shape}"
            )

    @property
    def size(self) -> int:
        return self.left.size

    def is_standard(self) -> bool:
        return self.left.is_standard() and self.right.is_column_strict()

    def render(self) -> str:
        return f"[{self.left.render()} | {self.right.render()}]"


# ---------------------------------------------------------------------------
# standardization


def standardize(filling: Filling) -> Filling:
    """Replace entries by 1..n respecting value order.

    Equal entries are numbered north first, then west: among cells holding
    the same value, a higher row receives the smaller label, and within a
    row the leftmost cell does.  Idempotent on standard input.
    """
    cells = list(filling.cells())
    # higher rows first, then left to right, so ties resolve by list order
    cells.sort(key=lambda rc: (entry_key(filling.entry(*rc)), -rc[0], rc[1]))
    labels = {rc: i + 1 for i, rc in enumerate(cells)}
    return Filling(
        tuple(
            tuple(labels[(r, c)] for c in range(filling.shape[r]))
            for r in range(len(filling.shape))
        )
    )


def std_order_entries(filling: Filling, tableau: Optional[Filling] = None) -> list[Entry]:
    """Entries of the filling listed in the cell order of a standard tableau.

    The default tableau is the filling's own standardization, giving the
    weakly increasing reading used throughout.
    """
    t = tableau if tableau is not None else standardize(filling)
    if t.shape != filling.shape:
        raise ValueError("tableau shape does not match filling shape")
    pos = {t.entry(r, c): (r, c) for r, c in t.cells()}
    return [filling.entry(*pos[i]) for i in range(1, filling.size + 1)]


# ---------------------------------------------------------------------------
# standard tableau enumeration


def enumerate_syt(
    n: Optional[int] = None,
    shape: Optional[Sequence[int]] = None,
    cap: int = 7,
) -> list[Filling]:
    """All standard tableaux with n cells, or of the given shape.

    Output order is deterministic (lexicographic row reading within a
    shape; shapes in decreasing lexicographic order).
    """
    if shape is not None:
        shape = check_partition(shape)
        if sum(shape) > cap:
            raise ResourceCapError(f"|shape| = {sum(shape)} exceeds cap {cap}")
        return _syt_copy(shape)
    if n is None:
        raise ValueError("pass n or shape")
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds cap {cap}")
    out: list[Filling] = []
    for lam in partitions_of(n):
        out.extend(_syt_of_shape(lam))
    return out


def _syt_copy(shape: tuple[int, ...]) -> list[Filling]:
    return list(_syt_of_shape(shape))


@cache
def _syt_of_shape(shape: tuple[int, ...]) -> list[Filling]:
    n = sum(shape)
    rows = [[0] * k for k in shape]
    fills = [0] * len(shape)
    out = []

    def place(v: int):
        if v > n:
            out.append(Filling(tuple(tuple(row[: fills[r]]) for r, row in enumerate(rows))))
            return
        for r in range(len(shape)):
            c = fills[r]
            if c >= shape[r]:
                continue
            if r > 0 and fills[r - 1] <= c:
                continue
            rows[r][c] = v
            fills[r] += 1
            place(v + 1)
            fills[r] -= 1

    place(1)
    out.sort(key=lambda t: t.row_sequence())
    return out


def column_strict_fillings(
    shape: Sequence[int], content: Sequence[Entry]
) -> list[Filling]:
    """All column-strict fillings of the shape whose content is the given multiset."""
    shape = check_partition(shape)
    if sum(shape) != len(content):
        return []
    values = sorted(set(content), key=entry_key)
    counts = {v: 0 for v in values}
    for e in content:
        counts[e] += 1
    nrows = len(shape)
    rows = [[None] * k for k in shape]
    out: list[Filling] = []
    order = [(r, c) for c in range(shape[0]) for r in range(nrows) if c < shape[r]]

    def place(idx: int):
        if idx == len(order):
            out.append(Filling(tuple(tuple(row) for row in rows)))
            return
        r, c = order[idx]
        for v in values:
            if counts[v] == 0:
                continue
            if c > 0 and entry_key(rows[r][c - 1]) > entry_key(v):
                continue
            if r > 0 and entry_key(rows[r - 1][c]) >= entry_key(v):
                continue
            counts[v] -= 1
            rows[r][c] = v
            place(idx + 1)
            rows[r][c] = None
            counts[v] += 1

    place(0)
    return out


# ---------------------------------------------------------------------------
# cocharge


def cocharge_pi(tableau: Filling) -> Filling:
    """The recursive cocharge labels of a standard tableau.

    The cell of 1 gets 0; the cell of i gets the previous label when i sits
    weakly southeast of i-1, and the previous label plus one when it sits
    weakly northwest.  Restricted to straight-shape standard tableaux.
    """
    if not tableau.is_standard():
        raise ValueError("cocharge labels are defined for standard tableaux")
    pos = {tableau.entry(r, c): (r, c) for r, c in tableau.cells()}
    values = {pos[1]: 0}
    for i in range(2, tableau.size + 1):
        r0, c0 = pos[i - 1]
        r1, c1 = pos[i]
        prev = values[pos[i - 1]]
        if r1 <= r0 and c1 >= c0:
            values[(r1, c1)] = prev
        elif r1 >= r0 and c1 <= c0:
            values[(r1, c1)] = prev + 1
        else:
            raise ValueError(f"{i} is neither southeast nor northwest of {i - 1}")
    return Filling(
        tuple(
            tuple(values[(r, c)] for c in range(tableau.shape[r]))
            for r in range(len(tableau.shape))
        )
    )


def cocharge_diagram(gamma, tableau: Filling) -> Filling:
    """Axis-cell filling obtained by recentering the cocharge labels.

    The labels are shifted along the axis alphabet so that the cell holding
    the pin entry of gamma (the index m2+p2+1) lands on (0, 0); the shift
    is the unique order- and cover-preserving one.
    """
    pin = gamma if isinstance(gamma, int) else gamma.pin
    if not 1 <= pin <= tableau.size:
        raise ValueError(
            f"pin index {pin} outside 1..{tableau.size}; diagram has the wrong size"
        )
    pi = cocharge_pi(tableau)
    r0, c0 = tableau.position_of(pin)
    v0 = pi.entry(r0, c0)
    return pi.with_entries(lambda v: axis_cell(v - v0))


def cocharge_all(gamma, n: int, cap: int = 7) -> dict[Filling, Filling]:
    """Map from each standard tableau on n cells to its cocharge diagram."""
    return {t: cocharge_diagram(gamma, t) for t in enumerate_syt(n=n, cap=cap)}


def decompose_columnstrict(gamma, filling: Filling) -> tuple[Filling, tuple[Pair, ...]]:
    """Split a column-strict axis filling into cocharge diagram plus offsets.

    Requires the entry at std-order position m2+p2+1 to be (0, 0).  Returns
    (C, alpha) where C is the cocharge diagram of the standardization and
    alpha is the weakly increasing axis sequence with filling = C + alpha
    entrywise in std order.
    """
    pin = gamma if isinstance(gamma, int) else gamma.pin
    if not filling.is_column_strict():
        raise ValueError("filling is not column strict")
    for e in filling.row_sequence():
        if not (isinstance(e, tuple) and is_axis(e)):
            raise ValueError(f"entry {e} is not an axis cell")
    t = standardize(filling)
    u = std_order_entries(filling, t)
    if u[pin - 1] != (0, 0):
        raise ValueError(
            f"std-order entry {pin} is {u[pin - 1]}, not (0, 0)"
        )
    c_fill = cocharge_diagram(pin, t)
    c = std_order_entries(c_fill, t)
    alpha = []
    for i, (ui, ci) in enumerate(zip(u, c), start=1):
        try:
            alpha.append(axis_sub(ui, ci))
        except ValueError as exc:
            raise ValueError(f"std-order index {i}: {exc}") from exc
    for i in range(len(alpha) - 1):
        if pair_key(alpha[i]) > pair_key(alpha[i + 1]):
            raise ValueError(f"offsets not weakly increasing at index {i + 1}")
    return c_fill, tuple(alpha)


def compose_columnstrict(gamma, tableau: Filling, alpha: Sequence[Pair]) -> Filling:
    """Inverse of decompose_columnstrict: rebuild the filling C + alpha.

    tableau is a standard tableau; alpha must be weakly increasing in the
    axis order with (0, 0) at the pin position.
    """
    pin = gamma if isinstance(gamma, int) else gamma.pin
    alpha = tuple(alpha)
    if len(alpha) != tableau.size:
        raise ValueError("offset sequence length does not match diagram size")
    if alpha[pin - 1] != (0, 0):
        raise ValueError(f"offset at pin position {pin} must be (0, 0)")
    for i in range(len(alpha) - 1):
        if pair_key(alpha[i]) > pair_key(alpha[i + 1]):
            raise ValueError(f"offsets not weakly increasing at index {i + 1}")
    c_fill = cocharge_diagram(pin, tableau)
    pos = {tableau.entry(r, c): (r, c) for r, c in tableau.cells()}
    entries = {}
    for i in range(1, tableau.size + 1):
        r, c = pos[i]
        entries[(r, c)] = axis_add(c_fill.entry(r, c), alpha[i - 1])
    return Filling(
        tuple(
            tuple(entries[(r, c)] for c in range(tableau.shape[r]))
            for r in range(len(tableau.shape))
        )
    )


# ---------------------------------------------------------------------------
# orders on bitableaux


def _lex_cmp(a: Sequence, b: Sequence, key=entry_key) -> int:
    for u, v in zip(a, b):
        ku, kv = key(u), key(v)
        if ku != kv:
            return -1 if ku < kv else 1
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    return 0


def _int_lex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    return _lex_cmp(a, b, key=lambda v: v)


def compare_bitableaux(first, second, mode: str, gamma=None) -> int:
    """Three-way comparison of bitableaux in one of the published orders.

    mode 'det' and 'per' are the straightening orders; mode 'bitab' is the
    basis-triangularity order and needs gamma (for the pin index splitting
    the sorted-segment statistics).  Returns -1, 0 or 1.
    """
    s1, u1 = (first.left, first.right) if isinstance(first, Bitableau) else first
    s2, u2 = (second.left, second.right) if isinstance(second, Bitableau) else second
    if s1.size != s2.size:
        raise ValueError("bitableaux on different cell counts are incomparable")

    if mode == "det":
        if s1.shape != s2.shape:
            return _int_lex_cmp(
                transpose_partition(s1.shape), transpose_partition(s2.shape)
            )
        c = _lex_cmp(u1.content(), u2.content())
        if c:
            return -c
        c = _lex_cmp(
            s1.column_sequence() + u1.column_sequence(),
            s2.column_sequence() + u2.column_sequence(),
        )
        return -c

    if mode == "per":
        if s1.shape != s2.shape:
            return _int_lex_cmp(s1.shape, s2.shape)
        c = _lex_cmp(u1.content(), u2.content())
        if c:
            return c
        c = _lex_cmp(
            s1.row_sequence() + u1.row_sequence(),
            s2.row_sequence() + u2.row_sequence(),
        )
        return -c

    if mode == "bitab":
        if gamma is None:
            raise ValueError("bitab mode needs gamma for the pin index")
        pin = gamma if isinstance(gamma, int) else gamma.pin
        if s1.shape != s2.shape:
            return _int_lex_cmp(
                transpose_partition(s1.shape), transpose_partition(s2.shape)
            )
        ux1, uy1 = _axis_segments(u1, pin)
        ux2, uy2 = _axis_segments(u2, pin)
        c = _lex_cmp(ux1, ux2)
        if c:
            return -c
        c = _lex_cmp(uy1, uy2)
        if c:
            return c
        c = _lex_cmp(u1.column_sequence(), u2.column_sequence())
        if c:
            return c
        c = _lex_cmp(s1.column_sequence(), s2.column_sequence())
        return -c

    raise ValueError(f"unknown mode {mode!r}")


def _axis_segments(u: Filling, pin: int) -> tuple[list, list]:
    """Sorted std-order entries strictly after the pin block, and before it."""
    ents = std_order_entries(u)
    after = sorted(ents[pin:], key=entry_key)
    before = sorted(ents[: pin - 1], key=entry_key)
    return after, before


def compare_bracket_content(first: tuple, second: tuple) -> int:
    """Order on slide-parameter pairs ((a...), (b...)): lexicographic on the
    leg slides, then on the arm slides.  Larger means slid farther."""
    (a1, b1), (a2, b2) = first, second
    if len(a1) != len(a2) or len(b1) != len(b2):
        raise ValueError("slide lists of different lengths are incomparable")
    c = _int_lex_cmp(a1, a2)
    if c:
        return c
    return _int_lex_cmp(b1, b2)


def distinct_permutations(seq: Sequence) -> Iterator[tuple]:
    """Distinct rearrangements of a sequence (multiset permutations)."""
    seen = set()
    for p in permutations(seq):
        if p not in seen:
            seen.add(p)
            yield p
