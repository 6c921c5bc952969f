"""Kuo condensation on planar bipartite graphs, and the region recurrences.

The face test uses the embedding the lattice already provides: every cell
has its three neighbours at fixed angles, so faces can be traced without a
general planarity routine.  Graphs with other vertex labels need explicit
``positions`` (or a ``face`` given by hand).
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .lattice import Tri
from .matchgen import DualGraph, dual_graph, profile_sum, tgf
from .qlaurent import LaurentQ
from .regions import InvalidParameters, Region, region
from .weights import vertical_weight


class KuoPreconditionError(ValueError):
    """Raised when a condensation identity is applied outside its hypotheses."""

    def __init__(self, msg: str):
        super().__init__(f"precondition violated: {msg}")


# -- planar faces ----------------------------------------------------------------

# angle (degrees) from a cell's centroid to each neighbour's centroid
_UP_DIRS = {(-1, 0): 150, (1, 0): 30, (0, -1): 270}
_DOWN_DIRS = {(-1, 0): 210, (1, 0): 330, (0, 1): 90}


def _angle(a, b, positions) -> float:
    if positions is None:
        if not (isinstance(a, Tri) and isinstance(b, Tri)):
            raise KuoPreconditionError("vertex positions are needed for graphs not built on the lattice")
        table = _UP_DIRS if a.up else _DOWN_DIRS
        return table[(b.i - a.i, b.j - a.j)]
    (ax, ay), (bx, by) = positions[a], positions[b]
    return math.degrees(math.atan2(by - ay, bx - ax)) % 360


def faces(g: DualGraph, positions: dict | None = None) -> list[list]:
    """Boundary walks of all faces of the embedded graph (outer face included)."""
    adj: dict = {v: [] for v in g.vertices}
    for a, b, _ in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    rot = {v: sorted(nbs, key=lambda w: _angle(v, w, positions)) for v, nbs in adj.items()}
    seen = set()
    out = []
    for a in rot:
        for b in rot[a]:
            if (a, b) in seen:
                continue
            walk = []
            x, y = a, b
            while (x, y) not in seen:
                seen.add((x, y))
                walk.append(x)
                nbs = rot[y]
                # turn to the neighbour just clockwise of where we came from
                k = nbs.index(x)
                x, y = y, nbs[k - 1]
            out.append(walk)
    return out


def _cyclic_in_order(walk: Sequence, quad: Sequence) -> bool:
    n = len(walk)
    for direction in (1, -1):
        seq = walk[::direction]
        for start in range(n):
            if seq[start] != quad[0]:
                continue
            k = 1
            for step in range(1, n):
                if seq[(start + step) % n] == quad[k]:
                    k += 1
                    if k == len(quad):
                        return True
    return False


def on_common_face(g: DualGraph, quad: Sequence, positions: dict | None = None, face: Sequence | None = None) -> bool:
    """Whether the vertices of ``quad`` appear in this cyclic order on one face."""
    walks = [list(face)] if face is not None else faces(g, positions)
    return any(_cyclic_in_order(w, quad) for w in walks)


# -- the identities ----------------------------------------------------------------

def _M(g: DualGraph) -> LaurentQ:
    return profile_sum(g)


def _require_face(g, quad, positions, face):
    if not on_common_face(g, quad, positions, face):
        raise KuoPreconditionError(f"{list(quad)} do not appear in cyclic order on a face")


def kuo_identity_balanced(g: DualGraph, u, v, w, s, positions: dict | None = None, face: Sequence | None = None) -> bool:
    """``M(G)M(G-uvws) == M(G-uv)M(G-ws) + M(G-us)M(G-vw)``.

    Needs equal colour classes, ``u, w`` in one class, ``v, s`` in the other,
    and the four vertices in cyclic order ``u, v, w, s`` on a face.
    """
    if len(g.up) != len(g.down):
        raise KuoPreconditionError("colour classes differ in size")
    if len({u, v, w, s}) != 4:
        raise KuoPreconditionError("the four vertices must be distinct")
    if not (g.side(u) == g.side(w) != g.side(v) == g.side(s)):
        raise KuoPreconditionError("u, w and v, s must lie in opposite colour classes")
    _require_face(g, (u, v, w, s), positions, face)
    lhs = _M(g) * _M(g.remove((u, v, w, s)))
    rhs = _M(g.remove((u, v))) * _M(g.remove((w, s))) + _M(g.remove((u, s))) * _M(g.remove((v, w)))
    return lhs == rhs


def kuo_identity_unbalanced(g: DualGraph, u, v, w, s, positions: dict | None = None, face: Sequence | None = None) -> bool:
    """``M(G-v)M(G-uws) == M(G-u)M(G-vws) + M(G-w)M(G-uvs)``.

    Needs one class larger by one, ``u, v, w`` in it, ``s`` in the other, and
    cyclic order ``u, v, w, s`` on a face.
    """
    big_side = 0 if len(g.up) == len(g.down) + 1 else 1 if len(g.down) == len(g.up) + 1 else None
    if big_side is None:
        raise KuoPreconditionError("one colour class must exceed the other by exactly one")
    if len({u, v, w, s}) != 4:
        raise KuoPreconditionError("the four vertices must be distinct")
    if not (g.side(u) == g.side(v) == g.side(w) == big_side != g.side(s)):
        raise KuoPreconditionError("u, v, w must lie in the larger class and s in the smaller")
    _require_face(g, (u, v, w, s), positions, face)
    lhs = _M(g.remove((v,))) * _M(g.remove((u, w, s)))
    rhs = _M(g.remove((u,))) * _M(g.remove((v, w, s))) + _M(g.remove((w,))) * _M(g.remove((u, v, s)))
    return lhs == rhs


def face_quadruples(g: DualGraph, walk: Sequence, balanced: bool = True) -> Iterable[tuple]:
    """Every ``(u, v, w, s)`` read off ``walk`` in order that fits the class pattern."""
    order = list(dict.fromkeys(walk))  # first visits, in walk order
    for quad in combinations(order, 4):
        sides = [g.side(t) for t in quad]
        if balanced:
            # rotate so the pattern reads u, v, w, s with u, w together
            if sides[0] == sides[2] != sides[1] == sides[3]:
                yield quad
        else:
            big = 0 if len(g.up) > len(g.down) else 1
            for r in range(4):
                rq = quad[r:] + quad[:r]
                rs = sides[r:] + sides[:r]
                if rs[0] == rs[1] == rs[2] == big != rs[3]:
                    yield rq


def outer_face(g: DualGraph, positions: dict | None = None) -> list:
    """The face walk with the largest enclosed area (signed shoelace, lattice graphs)."""
    walks = faces(g, positions)

    def pos(t):
        if positions is not None:
            return positions[t]
        return (t.i, 3 * t.j + (1 if t.up else 2))

    def area(walk):
        pts = [pos(t) for t in walk]
        return sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]))

    if not walks:
        # no edges: every vertex sits on the single face
        return list(g.vertices)
    # our traversal runs inner faces one way round and the outer face the other
    return min(walks, key=area)


def corner_instances(r: Region, balanced: bool = True, limit: int | None = None) -> list[tuple]:
    """Quadruples on the outer face of ``r``'s dual graph, for exhaustive checks."""
    g = dual_graph(r)
    if not g.vertices:
        return []
    out = []
    for quad in face_quadruples(g, outer_face(g), balanced):
        out.append(quad)
        if limit is not None and len(out) >= limit:
            break
    return out


# -- random instances ------------------------------------------------------------

def _random_weight(rng: random.Random) -> LaurentQ:
    terms = {rng.randint(-3, 3): rng.choice((1, 2, 3, -1)) for _ in range(rng.randint(1, 2))}
    value = LaurentQ(terms)
    return value if value else LaurentQ({0: 1})


def random_instance(rng: random.Random, balanced: bool = True, size: int = 4, attempts: int = 200):
    """A random weighted lattice graph plus a legal ``(u, v, w, s)``.

    Cells are a random subset of a hexagonal patch; edge weights are random
    Laurent polynomials.  Returns ``(graph, quad)``.
    """
    patch = [Tri(i, j) for j in range(size) for i in range(-size, size + 1)]
    for _ in range(attempts):
        cells = {t for t in patch if rng.random() < 0.8}
        ups = [t for t in cells if t.up]
        downs = [t for t in cells if not t.up]
        target = 0 if balanced else 1
        while len(ups) - len(downs) > target:
            cells.discard(ups.pop(rng.randrange(len(ups))))
        while len(ups) - len(downs) < target:
            if not downs:
                break
            cells.discard(downs.pop(rng.randrange(len(downs))))
        if len(ups) - len(downs) != target or len(cells) < 6:
            continue
        base = dual_graph(Region(frozenset(cells)))
        g = DualGraph(base.up, base.down, tuple((a, b, _random_weight(rng)) for a, b, _ in base.edges))
        walks = [wk for wk in faces(g) if len(set(wk)) >= 4]
        rng.shuffle(walks)
        for wk in walks:
            quads = list(face_quadruples(g, wk, balanced))
            if quads:
                return g, rng.choice(quads)
    raise RuntimeError("could not build a random instance")


# -- region recurrences --------------------------------------------------------------

RECURRENCES = ("halvedP", "quarteredR1", "typeA_case1", "typeA_case2", "typeB", "typeS")


class EnumerationOracle:
    """Enumeration TGFs with a cache, keyed by family and parameters."""

    def __init__(self, method: str = "profile"):
        self.method = method
        self.cache: dict = {}

    def __call__(self, family: str, **params) -> LaurentQ:
        key = (family, tuple(sorted((k, tuple(v) if isinstance(v, (list, tuple)) else v) for k, v in params.items())))
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = tgf(region(family, **params), self.method)
        return hit


def _wt(c: int) -> LaurentQ:
    return vertical_weight("wt1", c)


def _need(cond: bool, msg: str):
    if not cond:
        raise KuoPreconditionError(msg)


def _insert(alpha: int, seq: Sequence[int]) -> tuple:
    return tuple(sorted((alpha, *seq)))


def quartered_alpha(x: int, s: Sequence[int]) -> tuple[int, int]:
    """``(l, alpha)``: ``l`` is the largest index with no dent at ``s_l - 1``."""
    n = len(s)
    ext = list(s) + [n + x + 1]
    present = set(s)
    for l in range(n + 1, 0, -1):
        if ext[l - 1] - 1 not in present:
            return l, ext[l - 1] - 1
    raise AssertionError("unreachable")


def recurrence_sides(which: str, oracle: Callable | None = None, **p) -> tuple[LaurentQ, LaurentQ]:
    """Both sides of a region recurrence, every TGF taken from enumeration."""
    M = oracle or EnumerationOracle()
    if which == "halvedP":
        n, x = p["n"], p["x"]
        _need(n >= 2 and x >= 1, "halvedP needs n >= 2 and x >= 1")
        lhs = M("P", n=n, x=x) * M("P", n=n - 2, x=x)
        rhs = _wt(2 * x + n) * M("P", n=n - 1, x=x) ** 2 + M("P", n=n - 2, x=x + 1) * M("P", n=n, x=x - 1)
        return lhs, rhs
    if which == "quarteredR1":
        x, s = p["x"], tuple(p["s"])
        n = len(s)
        _need(x >= 1 and n >= 2, "quarteredR1 needs x >= 1 and n >= 2")
        l, alpha = quartered_alpha(x, s)
        _need(1 < l <= n, f"quarteredR1 needs 1 < l <= n (l = {l})")
        mid = s[1:-1]
        lhs = M("R1", x=x, s=s) * M("R1", x=x, s=_insert(alpha, mid))
        rhs = M("R1", x=x, s=_insert(alpha, s[1:])) * M("R1", x=x, s=s[:-1]) + M("R1", x=x + 1, s=s[1:]) * M(
            "R1", x=x - 1, s=_insert(alpha, s[:-1])
        )
        return lhs, rhs
    if which in ("typeA_case1", "typeA_case2", "typeB"):
        x, d, l = p["x"], p["d"], tuple(p["l"])
        m = len(l)
        _need(x >= 1 and m >= 1 and l[-1] == d, f"{which} needs x >= 1, m >= 1 and l_m == d")
        if which == "typeA_case1":
            _need(l[0] == 1 and d >= 2, "typeA_case1 needs l_1 == 1 and d >= 2")
            inner = tuple(v - 1 for v in l[1:-1])
            lhs = M("A", x=x, d=d, l=l) * M("A", x=x, d=d - 2, l=inner)
            rhs = _wt(2 * x + 2 * d - m) * M("A", x=x, d=d - 1, l=l[:-1]) * M(
                "A", x=x, d=d - 1, l=tuple(v - 1 for v in l[1:])
            ) + M("A", x=x + 1, d=d - 2, l=inner) * M("A", x=x - 1, d=d, l=l)
            return lhs, rhs
        if which == "typeA_case2":
            _need(l[0] > 1, "typeA_case2 needs l_1 > 1")
            low = tuple(v - 1 for v in l[:-1])
            lhs = M("A", x=x, d=d, l=l) * M("B", x=x, d=d - 2, l=low)
            rhs = _wt(2 * x + 2 * d - m) * M("A", x=x, d=d - 1, l=l[:-1]) * M(
                "B", x=x, d=d - 1, l=tuple(v - 1 for v in l)
            ) + M("B", x=x + 1, d=d - 2, l=low) * M("A", x=x - 1, d=d, l=l)
            return lhs, rhs
        lhs = M("B", x=x, d=d, l=l) * M("A", x=x, d=d - 1, l=l[:-1])
        rhs = _wt(2 * x + 2 * d - m + 1) * M("B", x=x, d=d - 1, l=l[:-1]) * M("A", x=x, d=d, l=l) + M(
            "A", x=x + 1, d=d - 1, l=l[:-1]
        ) * M("B", x=x - 1, d=d, l=l)
        return lhs, rhs
    if which == "typeS":
        x, u, d, l, h = p["x"], p["u"], p["d"], tuple(p["l"]), tuple(p["h"])
        m, n = len(l), len(h)
        _need(x >= 1 and m >= 1 and n >= 1, "typeS needs x, m, n >= 1")
        _need(h[-1] == u and l[-1] == d, "typeS needs u == h_n and d == l_m")
        e = min(u - n, d - m)
        lhs = M("S", x=x, u=u, d=d, l=l, h=h) * M("S", x=x, u=u - 1, d=d - 1, l=l[:-1], h=h[:-1])
        rhs = _wt(2 * x + 2 * u + 2 * d - 2 * e - m - n) * M("S", x=x, u=u - 1, d=d, l=l, h=h[:-1]) * M(
            "S", x=x, u=u, d=d - 1, l=l[:-1], h=h
        ) + M("S", x=x + 1, u=u - 1, d=d - 1, l=l[:-1], h=h[:-1]) * M("S", x=x - 1, u=u, d=d, l=l, h=h)
        return lhs, rhs
    raise ValueError(f"unknown recurrence {which!r}; choose from {', '.join(RECURRENCES)}")


def recurrence_check(which: str, oracle: Callable | None = None, **params) -> bool:
    try:
        lhs, rhs = recurrence_sides(which, oracle, **params)
    except InvalidParameters as exc:
        raise KuoPreconditionError(str(exc)) from exc
    return lhs == rhs


def recurrence_grid(which: str, limit: int = 3) -> Iterable[dict]:
    """Parameter points in the regime ``which`` assumes, up to size ``limit``."""
    if which == "halvedP":
        for n in range(2, limit + 2):
            for x in range(1, limit + 1):
                yield {"n": n, "x": x}
    elif which == "quarteredR1":
        for x in range(1, limit + 1):
            for n in range(2, limit + 1):
                for s in combinations(range(1, n + x + 1), n):
                    l, _ = quartered_alpha(x, s)
                    if 1 < l <= n:
                        yield {"x": x, "s": s}
    elif which in ("typeA_case1", "typeA_case2", "typeB"):
        for x in range(1, limit):
            for d in range(1, limit + 1):
                for m in range(1, d + 1):
                    for l in combinations(range(1, d + 1), m):
                        if l[-1] != d:
                            continue
                        if which == "typeA_case1" and not (l[0] == 1 and d >= 2):
                            continue
                        if which == "typeA_case2" and l[0] == 1:
                            continue
                        yield {"x": x, "d": d, "l": l}
    elif which == "typeS":
        for x in range(1, limit):
            for u in range(1, limit):
                for d in range(1, limit):
                    for n in range(1, u + 1):
                        for h in combinations(range(1, u + 1), n):
                            if h[-1] != u:
                                continue
                            for m in range(1, d + 1):
                                for l in combinations(range(1, d + 1), m):
                                    if l[-1] == d:
                                        yield {"x": x, "u": u, "d": d, "l": l, "h": h}
    else:
        raise ValueError(f"unknown recurrence {which!r}")
