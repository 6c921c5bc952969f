"""Matching generating functions of dual graphs.

Two independent engines compute ``M(G)``, the weighted sum over perfect
matchings:

* :func:`matching_gf` branches on a vertex of minimum remaining degree and
  memoizes on the set of unmatched vertices.  Simple, and the reference.
* :func:`matching_gf_profile` sweeps the vertices left to right and keeps,
  per step, a map from the profile (set of already-covered later vertices)
  to the accumulated weight.  Fast on long regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .lattice import Tri, neighbors
from .qlaurent import ONE, ZERO, LaurentQ
from .regions import Region


@dataclass(frozen=True)
class DualGraph:
    """Bipartite graph with Laurent-polynomial edge weights.

    ``up`` and ``down`` are the two colour classes (vertex labels, any
    hashables); ``edges`` holds ``(up_label, down_label, weight)``.
    """

    up: tuple
    down: tuple
    edges: tuple

    def __post_init__(self):
        ups, downs = set(self.up), set(self.down)
        if ups & downs:
            raise ValueError("colour classes overlap")
        for a, b, w in self.edges:
            if a not in ups or b not in downs:
                raise ValueError(f"edge {(a, b)} does not join the two classes")
            if not w:
                raise ValueError(f"edge {(a, b)} has zero weight")

    @property
    def vertices(self) -> tuple:
        return self.up + self.down

    def side(self, v) -> int:
        """0 for the up class, 1 for the down class."""
        if v in self._up_set:
            return 0
        if v in self._down_set:
            return 1
        raise KeyError(v)

    @property
    def _up_set(self) -> frozenset:
        return frozenset(self.up)

    @property
    def _down_set(self) -> frozenset:
        return frozenset(self.down)

    def remove(self, vertices: Iterable[Hashable]) -> "DualGraph":
        gone = set(vertices)
        missing = gone - set(self.vertices)
        if missing:
            raise KeyError(f"not vertices of the graph: {sorted(map(str, missing))}")
        return DualGraph(
            tuple(v for v in self.up if v not in gone),
            tuple(v for v in self.down if v not in gone),
            tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone),
        )

    def with_unit_weights(self) -> "DualGraph":
        return DualGraph(self.up, self.down, tuple((a, b, ONE) for a, b, _ in self.edges))

    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for a, b, w in self.edges:
            adj[a].append((b, w))
            adj[b].append((a, w))
        return adj


def dual_graph(r: Region) -> DualGraph:
    """One vertex per cell, one edge per lozenge inside the region."""
    cells = r.cells
    up = tuple(sorted(t for t in cells if t.up))
    down = tuple(sorted(t for t in cells if not t.up))
    edges = []
    for t in up:
        for nb in neighbors(t):
            if nb in cells:
                edges.append((t, nb, r.weight(t, nb)))
    return DualGraph(up, down, tuple(edges))


def _indexed(g: DualGraph, order: Sequence | None = None):
    verts = list(order) if order is not None else list(g.vertices)
    index = {v: k for k, v in enumerate(verts)}
    adj = [[] for _ in verts]
    for a, b, w in g.edges:
        ia, ib = index[a], index[b]
        adj[ia].append((ib, w))
        adj[ib].append((ia, w))
    return verts, adj


def matching_gf(g: DualGraph) -> LaurentQ:
    """Weighted sum of perfect matchings by memoized minimum-degree branching."""
    if len(g.up) != len(g.down):
        return ZERO
    verts, adj = _indexed(g)
    memo: dict[int, LaurentQ] = {}

    def solve(alive: int) -> LaurentQ:
        if not alive:
            return ONE
        hit = memo.get(alive)
        if hit is not None:
            return hit
        best, best_opts = -1, None
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            opts = [(u, w) for u, w in adj[v] if alive >> u & 1]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if len(opts) <= 1:
                    break
        total = ZERO
        base = alive & ~(1 << best)
        for u, w in best_opts:
            sub = solve(base & ~(1 << u))
            if sub:
                total = total + w * sub
        memo[alive] = total
        return total

    return solve((1 << len(verts)) - 1)


def _sweep_order(g: DualGraph) -> list:
    verts = list(g.vertices)
    if all(isinstance(v, Tri) for v in verts):
        # columns left to right, bottom to top inside a column
        return sorted(verts, key=lambda t: (t.i, t.j))
    return verts


def profile_sum(g: DualGraph, order: Sequence | None = None, one=ONE, zero=ZERO, weight=None):
    """Profile dynamic program over an arbitrary vertex order.

    Each vertex, when reached, is either already covered (its bit is in the
    profile) or gets matched to a later neighbour.  Values only need ``+`` and
    ``*``; ``weight`` maps an edge weight to the value ring.
    """
    if len(g.up) != len(g.down):
        return zero
    verts, adj = _indexed(g, order if order is not None else _sweep_order(g))
    later = [
        [(u, w if weight is None else weight(w)) for u, w in nbs if u > k]
        for k, nbs in enumerate(adj)
    ]
    states = {0: one}
    for k in range(len(verts)):
        bit = 1 << k
        nxt: dict = {}
        opts = later[k]
        for mask, val in states.items():
            if mask & bit:
                key = mask ^ bit
                prev = nxt.get(key)
                nxt[key] = val if prev is None else prev + val
                continue
            for u, w in opts:
                ub = 1 << u
                if mask & ub:
                    continue
                key = mask | ub
                term = val * w
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        states = nxt
        if not states:
            return zero
    return states.get(0, zero)


def matching_gf_profile(r: Region | DualGraph) -> LaurentQ:
    """Same value as :func:`matching_gf`, by a left-to-right profile sweep."""
    g = dual_graph(r) if isinstance(r, Region) else r
    return profile_sum(g)


def tiling_count(r: Region | DualGraph) -> int:
    """Number of tilings (perfect matchings), ignoring weights."""
    g = dual_graph(r) if isinstance(r, Region) else r
    return profile_sum(g, one=1, zero=0, weight=lambda w: 1)


def weighted_count_at_one(r: Region | DualGraph) -> Fraction:
    """``M`` at ``q = 1`` computed directly with rational edge weights."""
    g = dual_graph(r) if isinstance(r, Region) else r
    return profile_sum(g, one=Fraction(1), zero=Fraction(0), weight=lambda w: w.eval_at_one())


def tgf(r: Region, method: str = "profile") -> LaurentQ:
    """Tiling generating function of a region; ``method`` is 'profile' or 'backtrack'."""
    if r.degenerate:
        return ONE
    if method == "profile":
        return matching_gf_profile(r)
    if method in ("backtrack", "enumerate"):
        return matching_gf(dual_graph(r))
    raise ValueError(f"unknown method {method!r}")
