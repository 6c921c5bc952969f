"""Region families on the triangular lattice.

Every family is drawn from the same recipe: a stack of horizontal strips
bounded on the left by a (zigzag) path ``west[k]`` and on the right by a path
``east[k]``, where ``k`` indexes the horizontal lattice lines from the bottom.
Dents are then removed.  The vertical axis of the weight scheme always sits at
``i == axis_offset``.

Side lengths below are in lattice edges; the abscissae in ``west``/``east``
are in half edges.

Family conventions (``m = len(l)``, ``n = len(h)`` or ``len(s)``):

========  =====================================================  ======
family    shape                                                  weight
========  =====================================================  ======
P         halved hexagon, sides ``x, n, n, x`` + west zigzag     wt1
Pprime    same cells as P, axis through the west lozenges        wt2
R1 / R3   trapezoid ``x, 2n-1, x+n, 2n-1``, dents ``s`` on base  wt1/wt2
R2 / R4   trapezoid ``x, 2n, x+n, 2n``, dents ``s`` on base      wt1/wt2
A         sides ``x, 2d-m, m, x+d-m``, ``d`` bumps, keep ``l``   wt1
B         as A with NE ``2d-m+1`` and a doubled bottom step      wt1
C         A shape, axis through the bumps (see ``_c_north``)     wt2
D         B shape, axis through the bumps                        wt2
S         reflected A below, D above, ``l`` below / ``h`` above  wt2
T         S with NE/SE/N/S adjusted and the middle down removed  wt2
========  =====================================================  ======
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lattice import Tri, lozenge_of, neighbors, render
from .qlaurent import ONE, ZERO, LaurentQ
from .weights import WeightScheme, lozenge_weight

FAMILIES = ("P", "Pprime", "R1", "R2", "R3", "R4", "A", "B", "C", "D", "S", "T")
_FAMILY_LOOKUP = {f.lower(): f for f in FAMILIES}
_FAMILY_LOOKUP.update({"p'": "Pprime", "pp": "Pprime", "p_prime": "Pprime"})

# which integer parameters each family reads
_PARAMS = {
    "P": ("n", "x"),
    "Pprime": ("n", "x"),
    "R1": ("x", "s"),
    "R2": ("x", "s"),
    "R3": ("x", "s"),
    "R4": ("x", "s"),
    "A": ("x", "d", "l"),
    "B": ("x", "d", "l"),
    "C": ("x", "u", "h"),
    "D": ("x", "u", "h"),
    "S": ("x", "u", "d", "l", "h"),
    "T": ("x", "u", "d", "l", "h"),
}


class InvalidParameters(ValueError):
    """A region specification violates its family's hypotheses."""


class NotSubregion(ValueError):
    pass


def parse_family(name: str) -> str:
    try:
        return _FAMILY_LOOKUP[str(name).lower()]
    except KeyError:
        raise InvalidParameters(f"unknown region family {name!r}") from None


@dataclass(frozen=True)
class RegionSpec:
    """Serializable description of a region: family tag plus parameters."""

    family: str
    x: int = 0
    n: int = 0
    d: int = 0
    u: int = 0
    m: int = 0
    s: tuple[int, ...] = ()
    l: tuple[int, ...] = ()
    h: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        for name in ("s", "l", "h"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        fam = self.family
        # list lengths determine n / m when the lists are the parameters
        if fam.startswith("R") or fam in ("C", "D", "S", "T"):
            lst = self.s if fam.startswith("R") else self.h
            if self.n and self.n != len(lst):
                raise InvalidParameters(f"n={self.n} but {len(lst)} positions given")
            object.__setattr__(self, "n", len(lst))
        if fam in ("A", "B", "S", "T"):
            if self.m and self.m != len(self.l):
                raise InvalidParameters(f"m={self.m} but {len(self.l)} positions given")
            object.__setattr__(self, "m", len(self.l))

    @classmethod
    def make(cls, family: str, **params) -> "RegionSpec":
        return cls(family=family, **params)

    def validate(self) -> "RegionSpec":
        fam = self.family
        for name in ("x", "n", "d", "u", "m"):
            if getattr(self, name) < 0:
                raise InvalidParameters(f"{name} must be non-negative")

        def increasing(seq, lo, hi, what):
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise InvalidParameters(f"{what} must be strictly increasing: {list(seq)}")
            if seq and (seq[0] < lo or seq[-1] > hi):
                raise InvalidParameters(f"{what} must lie in [{lo}, {hi}]: {list(seq)}")

        if fam.startswith("R"):
            increasing(self.s, 1, self.n + self.x, "dent positions s")
        if fam in ("A", "B", "S", "T"):
            increasing(self.l, 1, self.d, "bump positions l")
        if fam in ("C", "D", "S", "T"):
            increasing(self.h, 1, self.u, "bump positions h")
        return self

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        for name in _PARAMS[self.family]:
            value = getattr(self, name)
            out[name] = list(value) if isinstance(value, tuple) else value
        return out

    @classmethod
    def from_json(cls, data) -> "RegionSpec":
        if isinstance(data, str):
            data = json.loads(data)
        data = dict(data)
        fam = parse_family(data.pop("family"))
        allowed = set(_PARAMS[fam]) | {"n", "m"}
        extra = set(data) - allowed
        if extra:
            raise InvalidParameters(f"unexpected fields for family {fam}: {sorted(extra)}")
        return cls(family=fam, **data)

    def label(self) -> str:
        parts = []
        for name in _PARAMS[self.family]:
            value = getattr(self, name)
            if isinstance(value, tuple):
                value = "(" + ",".join(map(str, value)) + ")"
            parts.append(f"{name}={value}")
        return f"{self.family}[{', '.join(parts)}]"


@dataclass(frozen=True)
class Region:
    cells: frozenset
    scheme: WeightScheme = WeightScheme.SYMMETRIC
    axis_offset: int = 0
    dents: frozenset = field(default=frozenset(), compare=False)
    spec: RegionSpec | None = field(default=None, compare=False)

    @property
    def up_count(self) -> int:
        return sum(1 for t in self.cells if t.up)

    @property
    def down_count(self) -> int:
        return len(self.cells) - self.up_count

    @property
    def degenerate(self) -> bool:
        return not self.cells

    def with_cells(self, cells: Iterable[Tri]) -> "Region":
        return Region(frozenset(cells), self.scheme, self.axis_offset)

    def with_scheme(self, scheme, axis_offset: int | None = None) -> "Region":
        return Region(
            self.cells,
            WeightScheme.parse(scheme),
            self.axis_offset if axis_offset is None else axis_offset,
            self.dents,
            self.spec,
        )

    def weight(self, a: Tri, b: Tri) -> LaurentQ:
        return lozenge_weight(self.scheme, lozenge_of(a, b), self.axis_offset)

    def render(self) -> str:
        return render(self.cells, self.dents, self.axis_offset if self.cells else None)


def is_balanced(r: Region) -> bool:
    return r.up_count == r.down_count


# -- construction -----------------------------------------------------------

def _strips(west: Sequence[int], east: Sequence[int]) -> tuple[int, dict]:
    """Cells between two boundary paths; returns (base height, {(i, k): Tri})."""
    if len(west) != len(east):
        raise ValueError("boundary paths must have equal length")
    if len(west) < 2:
        return 0, {}
    base = west[0] & 1  # lattice vertices have i + j even
    found = {}
    for k in range(len(west) - 1):
        if abs(west[k + 1] - west[k]) != 1 or abs(east[k + 1] - east[k]) != 1:
            raise ValueError(f"boundary step at line {k} is not a lattice step")
        lo = max(west[k], west[k + 1])
        hi = min(east[k], east[k + 1])
        for i in range(lo, hi + 1):
            found[(i, k)] = Tri(i, base + k)
    return base, found


def _assemble(west, east, removed, scheme, axis_offset, spec) -> Region:
    """``removed`` holds ``(i, k, is_up)`` triples in strip coordinates."""
    _, found = _strips(west, east)
    cells = dict(found)
    dents = set()
    for i, k, want_up in removed:
        t = cells.pop((i, k), None)
        if t is None or t.up != want_up:
            raise AssertionError(f"dent {(i, k)} missing or misoriented in {spec}")
        dents.add(t)
    return Region(frozenset(cells.values()), WeightScheme.parse(scheme), axis_offset, frozenset(dents), spec)


def _zigzag(lines: int, phase: int) -> list[int]:
    """West path alternating between 0 and 1, starting at ``phase``."""
    return [(phase + k) & 1 for k in range(lines)]


def _east(base_right: int, rise: int, lines: int) -> list[int]:
    """Right boundary moving right for ``rise`` strips, then left."""
    return [base_right + k if k <= rise else base_right + 2 * rise - k for k in range(lines)]


def _halved(n: int, x: int, scheme, axis_offset: int, spec) -> Region:
    west = _zigzag(2 * n + 1, 1)
    east = [1 + 2 * x + min(k, 2 * n - k) for k in range(2 * n + 1)]
    return _assemble(west, east, (), scheme, axis_offset, spec)


def _quartered(kind: int, x: int, s: Sequence[int], spec) -> Region:
    n = len(s)
    if n == 0:
        return Region(frozenset(), _QUARTER_SCHEME[kind], _QUARTER_OFFSET[kind], spec=spec)
    odd = kind in (1, 3)
    if odd:
        lines = 2 * n
        west = _zigzag(lines, 0)
        east = [2 * (x + n) - k for k in range(lines)]
        removed = [(2 * p - 1, 0, True) for p in s]
    else:
        lines = 2 * n + 1
        west = _zigzag(lines, 1)
        east = [1 + 2 * (x + n) - k for k in range(lines)]
        removed = [(2 * p, 0, True) for p in s]
    return _assemble(west, east, removed, _QUARTER_SCHEME[kind], _QUARTER_OFFSET[kind], spec)


_QUARTER_SCHEME = {1: "wt1", 2: "wt1", 3: "wt2", 4: "wt2"}
_QUARTER_OFFSET = {1: 0, 2: 0, 3: 1, 4: 1}


def _one_sided(kind: str, north: int, bumps: int, keep: Sequence[int], scheme, axis_offset, spec) -> Region:
    """A-shape (``kind == 'A'``) or B-shape halved hexagon with west bumps.

    ``north`` is the top side; bumps ``1..bumps`` are numbered from the bottom
    and every bump not listed in ``keep`` loses its up-pointing triangle.
    """
    m = len(keep)
    south = north + bumps - m
    if kind == "A":
        lines = 2 * bumps + 1
        west = _zigzag(lines, 1)
        east = _east(1 + 2 * south, m, lines)
        bump_line = [2 * b - 1 for b in range(1, bumps + 1)]
    else:
        lines = 2 * bumps + 2
        west = [2] + _zigzag(lines - 1, 1)
        east = _east(2 + 2 * south, m, lines)
        bump_line = [2 * b for b in range(1, bumps + 1)]
    keep = set(keep)
    removed = [(1, bump_line[b - 1], True) for b in range(1, bumps + 1) if b not in keep]
    return _assemble(west, east, removed, scheme, axis_offset, spec)


def _c_north(x: int, u: int, n: int) -> int:
    # C regions are T regions with d = 0 after the forced bottom strip is
    # peeled off; that strip makes the north side one longer unless u > n.
    return x + 1 - min(u - n, 1)


def _two_sided(kind: str, x: int, u: int, d: int, l: Sequence[int], h: Sequence[int], spec) -> Region:
    m, n = len(l), len(h)
    if kind == "S":
        e = min(u - n, d - m)
        south = x + u - n - e
        rise = 2 * d - m + n
    else:
        e = min(u - n, d - m + 1)
        south = x + u - n - e
        rise = 2 * d - m + n + 1
    lines = 2 * u + 2 * d + 2
    west = _zigzag(2 * d + 1, 1) + [-((t & 1)) for t in range(2 * u + 1)]
    east = _east(1 + 2 * south, rise, lines)
    removed = []
    keep_l, keep_h = set(l), set(h)
    for b in range(1, d + 1):
        if b not in keep_l:
            removed.append((1, 2 * d - 2 * b, False))
    for c in range(1, u + 1):
        if c not in keep_h:
            removed.append((0, 2 * d + 2 * c, True))
    if kind == "T":
        removed.append((1, 2 * d, False))
    return _assemble(west, east, removed, "wt2", 0, spec)


def build_region(spec: RegionSpec) -> Region:
    """Cells, weight scheme and axis placement for ``spec``."""
    spec.validate()
    fam = spec.family
    if fam == "P":
        return _halved(spec.n, spec.x, "wt1", 0, spec)
    if fam == "Pprime":
        return _halved(spec.n, spec.x, "wt2", 1, spec)
    if fam.startswith("R"):
        return _quartered(int(fam[1]), spec.x, spec.s, spec)
    if fam == "A":
        return _one_sided("A", spec.x, spec.d, spec.l, "wt1", 0, spec)
    if fam == "B":
        return _one_sided("B", spec.x, spec.d, spec.l, "wt1", 0, spec)
    if fam == "C":
        return _one_sided("A", _c_north(spec.x, spec.u, spec.n), spec.u, spec.h, "wt2", 1, spec)
    if fam == "D":
        return _one_sided("B", spec.x, spec.u, spec.h, "wt2", 1, spec)
    return _two_sided(fam, spec.x, spec.u, spec.d, spec.l, spec.h, spec)


def region(family: str, **params) -> Region:
    """Shorthand: ``region("A", x=1, d=2, l=(2,))``."""
    return build_region(RegionSpec(family=family, **params))


def hexagon(a: int, b: int, c: int, scheme="wt1") -> Region:
    """Semiregular hexagon with sides ``a, b, c, a, b, c`` (bottom side ``a``, counterclockwise).

    Not one of the families; used as a MacMahon-box sanity check.
    """
    if min(a, b, c) < 0:
        raise InvalidParameters("hexagon sides must be non-negative")

    def left(y):
        return -y if y <= c else y - 2 * c

    def right(y):
        return 2 * a + y if y <= b else 2 * a + 2 * b - y

    cells = set()
    for j in range(b + c):
        for i in range(min(left(j), left(j + 1)) + 1, max(right(j), right(j + 1))):
            cells.add(Tri(i, j))
    return Region(frozenset(cells), WeightScheme.parse(scheme), a)


# -- forced lozenges and splitting ------------------------------------------

def forced_reduce(r: Region) -> tuple[Region, LaurentQ]:
    """Strip forced lozenges; returns ``(reduced, W)`` with ``M(r) == W * M(reduced)``.

    A cell with a single available neighbour forces that lozenge.  A cell
    with none makes the region untileable: ``(empty region, 0)``.
    """
    cells = set(r.cells)
    weight = ONE
    pending = list(cells)
    while pending:
        t = pending.pop()
        if t not in cells:
            continue
        nbs = [nb for nb in neighbors(t) if nb in cells]
        if not nbs:
            return r.with_cells(()), ZERO
        if len(nbs) == 1:
            mate = nbs[0]
            weight = weight * r.weight(t, mate)
            cells.discard(t)
            cells.discard(mate)
            for c in (t, mate):
                pending.extend(nb for nb in neighbors(c) if nb in cells)
    return r.with_cells(cells), weight


def split_check(r: Region, q: Region | Iterable[Tri]) -> bool:
    """Whether ``q`` satisfies the two region-splitting conditions inside ``r``.

    (1) every cell of ``q`` with an edge against ``r - q`` has the same
    orientation and (2) ``q`` is balanced.
    """
    qcells = q.cells if isinstance(q, Region) else frozenset(q)
    if not qcells <= r.cells:
        raise NotSubregion("q is not contained in r")
    rest = r.cells - qcells
    boundary = {t.up for t in qcells if any(nb in rest for nb in neighbors(t))}
    ups = sum(1 for t in qcells if t.up)
    return len(boundary) <= 1 and 2 * ups == len(qcells)
