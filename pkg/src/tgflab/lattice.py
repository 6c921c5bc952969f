"""Triangular-lattice geometry.

Coordinates follow the usual lozenge-tiling picture: ``i`` counts half edge
lengths along the horizontal axis, ``j`` counts triangle heights upward.
Lattice vertices are the points ``(i, j)`` with ``i + j`` even.

A unit triangle is named by ``(i, j)``: ``j`` is the horizontal strip it
lives in (between the lines ``y = j`` and ``y = j + 1``) and ``i`` is the
abscissa of its horizontal edge midpoint.  Orientation then follows from
parity: ``i + j`` odd is an up-pointing triangle (base on ``y = j``, apex at
``(i, j + 1)``), ``i + j`` even is down-pointing (top edge on ``y = j + 1``,
bottom vertex at ``(i, j)``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

UP = "up"
DOWN = "down"

VERTICAL = "vertical"
LEFT = "left"    # the down triangle sits to the left of the up triangle
RIGHT = "right"  # the down triangle sits to the right of the up triangle


class Tri(NamedTuple):
    i: int
    j: int

    @property
    def up(self) -> bool:
        return (self.i + self.j) & 1 == 1

    @property
    def orientation(self) -> str:
        return UP if self.up else DOWN

    @property
    def anchor(self) -> tuple[int, int]:
        """Midpoint of the horizontal edge."""
        return (self.i, self.j) if self.up else (self.i, self.j + 1)

    def vertices(self) -> tuple[tuple[int, int], ...]:
        i, j = self
        if self.up:
            return (i - 1, j), (i + 1, j), (i, j + 1)
        return (i - 1, j + 1), (i + 1, j + 1), (i, j)

    def translate(self, di: int, dj: int) -> "Tri":
        if (di + dj) & 1:
            raise ValueError("translation must map lattice vertices to lattice vertices")
        return Tri(self.i + di, self.j + dj)


def up_tri(i: int, j: int) -> Tri:
    t = Tri(i, j)
    if not t.up:
        raise ValueError(f"{(i, j)} is not an up-pointing triangle")
    return t


def down_tri(i: int, j: int) -> Tri:
    t = Tri(i, j)
    if t.up:
        raise ValueError(f"{(i, j)} is not a down-pointing triangle")
    return t


def neighbors(t: Tri) -> list[Tri]:
    """The three edge-adjacent triangles, ordered left, right, vertical."""
    i, j = t
    vert = Tri(i, j - 1) if t.up else Tri(i, j + 1)
    return [Tri(i - 1, j), Tri(i + 1, j), vert]


class Lozenge(NamedTuple):
    up: Tri
    down: Tri
    orientation: str
    center: tuple[Fraction, Fraction]

    @property
    def cells(self) -> frozenset:
        return frozenset((self.up, self.down))


def lozenge_of(a: Tri, b: Tri) -> Lozenge:
    a, b = Tri(*a), Tri(*b)
    if a.up == b.up:
        raise ValueError(f"{a} and {b} have the same orientation")
    up, down = (a, b) if a.up else (b, a)
    if down.j == up.j:
        if down.i == up.i - 1:
            orient = LEFT
        elif down.i == up.i + 1:
            orient = RIGHT
        else:
            raise ValueError(f"{a} and {b} are not adjacent")
        # the shared slanted edge runs between heights j and j+1
        center = (Fraction(up.i + down.i, 2), Fraction(2 * up.j + 1, 2))
    elif down.j == up.j - 1 and down.i == up.i:
        orient = VERTICAL
        center = (Fraction(up.i), Fraction(up.j))
    else:
        raise ValueError(f"{a} and {b} are not adjacent")
    return Lozenge(up, down, orient, center)


def lozenges_within(cells: Iterable[Tri]) -> list[Lozenge]:
    """Every lozenge formed by two cells of ``cells`` (one per interior edge)."""
    cells = set(cells)
    out = []
    for t in sorted(cells):
        if not t.up:
            continue
        for nb in neighbors(t):
            if nb in cells:
                out.append(lozenge_of(t, nb))
    return out


def render(cells: Iterable[Tri], dents: Iterable[Tri] = (), axis: int | None = None) -> str:
    """ASCII picture, one character per triangle.

    ``^``/``v`` are cells, ``*`` marks removed triangles and ``|`` marks the
    column of the vertical axis on an extra bottom line.
    """
    cells = set(cells)
    dents = set(dents)
    every = cells | dents
    if not every:
        return ""
    i0 = min(t.i for t in every)
    i1 = max(t.i for t in every)
    j0 = min(t.j for t in every)
    j1 = max(t.j for t in every)
    if axis is not None:
        i0 = min(i0, axis)
        i1 = max(i1, axis)
    lines = []
    for j in range(j1, j0 - 1, -1):
        row = []
        for i in range(i0, i1 + 1):
            t = Tri(i, j)
            if t in cells:
                row.append("^" if t.up else "v")
            elif t in dents:
                row.append("*")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
    if axis is not None:
        lines.append(" " * (axis - i0) + "|")
    return "\n".join(lines)
