"""Hollow lattice diagrams, slide modifications, and their determinants.

A lattice diagram is an ordered tuple of cells in the first quadrant,
each cell identified by the corner (a, b) nearest the origin.  The order
matters: it fixes the sign of the attached determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .exactpoly import SparsePoly
from .tableaux import ResourceCapError

Cell = tuple[int, int]
Cells = tuple[Cell, ...]


@dataclass(frozen=True)
class HollowGamma:
    """Parameters (m, k, p) of a hollow diagram: a hook with a contiguous
    block removed from the arm and from the leg.

    m1, m2 >= 1 are the attached arm and leg lengths (counting the corner
    once, on the leg side), k1, k2 >= 1 the gap offsets, and p1, p2 >= 0
    the detached block lengths minus one.  The cell list runs from the top
    of the detached leg down to the corner, then out the arm.
    """

    m1: int
    m2: int
    k1: int
    k2: int
    p1: int
    p2: int

    def __post_init__(self):
        for name in ("m1", "m2"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        for name in ("k1", "k2"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        for name in ("p1", "p2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")

    @property
    def n(self) -> int:
        return self.m1 + self.p1 + self.m2 + self.p2 + 1

    @property
    def pin(self) -> int:
        """Index m2 + p2 + 1, the std-order position pinned to (0, 0)."""
        return self.m2 + self.p2 + 1

    def cells(self) -> Cells:
        """The diagram's cells in normative order (fixes the sign of delta)."""
        return self.bracket_cells((0,) * (self.p2 + 1), (0,) * (self.p1 + 1))

    def bracket_cells(self, leg_slides: Sequence[int], arm_slides: Sequence[int]) -> Cells:
        """Cells after sliding detached blocks toward the origin.

        leg_slides[i] lowers the i-th detached leg cell (innermost first) by
        that amount; arm_slides likewise on the arm.  Lists must be
        nonincreasing and at most p+1 long; short lists leave the remaining
        cells unslid.  Positions keep their slots, so the sign convention
        of the unslid diagram is preserved.
        """
        a = tuple(leg_slides)
        b = tuple(arm_slides)
        if len(a) > self.p2 + 1:
            raise ValueError(f"leg slide list longer than {self.p2 + 1}")
        if len(b) > self.p1 + 1:
            raise ValueError(f"arm slide list longer than {self.p1 + 1}")
        a = a + (0,) * (self.p2 + 1 - len(a))
        b = b + (0,) * (self.p1 + 1 - len(b))
        if any(v < 0 for v in a + b):
            raise ValueError("slide amounts must be nonnegative")
        if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
            raise ValueError("leg slides must be nonincreasing")
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)):
            raise ValueError("arm slides must be nonincreasing")

        cells: list[Cell] = []
        for ell in range(self.p2, -1, -1):
            y = self.m2 + self.k2 - 1 + ell - a[ell]
            if y < 0:
                raise ValueError(f"leg slide {a[ell]} pushes a cell below the axis")
            cells.append((0, y))
        for y in range(self.m2 - 1, 0, -1):
            cells.append((0, y))
        cells.append((0, 0))
        for x in range(1, self.m1):
            cells.append((x, 0))
        for j in range(0, self.p1 + 1):
            x = self.m1 + self.k1 - 1 + j - b[j]
            if x < 0:
                raise ValueError(f"arm slide {b[j]} pushes a cell past the origin")
            cells.append((x, 0))
        return tuple(cells)

    def render(self) -> str:
        return f"{self.m1},{self.m2}:{self.k1},{self.k2}:{self.p1},{self.p2}"

    @classmethod
    def parse(cls, text: str) -> "HollowGamma":
        """Parse "m1,m2:k1,k2:p1,p2"; errors carry the offending position."""
        groups = text.split(":")
        if len(groups) != 3:
            raise ValueError(
                f"gamma string {text!r} must have three ':'-separated pairs, got {len(groups)}"
            )
        values = []
        for gi, (group, name) in enumerate(zip(groups, ("m", "k", "p"))):
            nums = group.split(",")
            if len(nums) != 2:
                raise ValueError(
                    f"gamma group {gi + 1} ({name}) must be two ','-separated integers, got {group!r}"
                )
            for ni, num in enumerate(nums):
                try:
                    values.append(int(num))
                except ValueError:
                    raise ValueError(
                        f"gamma group {gi + 1} ({name}{ni + 1}): {num!r} is not an integer"
                    ) from None
        m1, m2, k1, k2, p1, p2 = values
        return cls(m1=m1, m2=m2, k1=k1, k2=k2, p1=p1, p2=p2)


def render_cells(cells: Sequence[Cell]) -> str:
    return ",".join(f"({a},{b})" for a, b in sorted(cells))


def delta(cells: Sequence[Cell], cap: int = 7) -> SparsePoly:
    """The determinant with rows x_j^a y_j^b over the diagram's cells.

    Expanded as the signed permutation sum; swapping two cells negates the
    result and a repeated cell gives zero.
    """
    cells = tuple((int(a), int(b)) for a, b in cells)
    n = len(cells)
    if n > cap:
        raise ResourceCapError(f"determinant on {n} cells exceeds cap {cap}")
    if n == 0:
        raise ValueError("empty diagram")
    for a, b in cells:
        if a < 0 or b < 0:
            raise ValueError(f"cell ({a},{b}) outside the first quadrant")
    if len(set(cells)) != n:
        return SparsePoly.zero(n)
    terms = {}
    for sigma in permutations(range(n)):
        sign = _perm_sign(sigma)
        xexp = [0] * n
        yexp = [0] * n
        for i, j in enumerate(sigma):
            a, b = cells[i]
            xexp[j] += a
            yexp[j] += b
        terms[(tuple(xexp), tuple(yexp))] = sign
    return SparsePoly(n, terms)


def _perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
