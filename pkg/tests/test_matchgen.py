from fractions import Fraction

from tgflab.lattice import Tri
from tgflab.matchgen import DualGraph, dual_graph, matching_gf, matching_gf_profile, tgf, tiling_count, weighted_count_at_one
from tgflab.qlaurent import ONE, LaurentQ
from tgflab.regions import Region, build_region, region
from tgflab.regions import RegionSpec

HALF = Fraction(1, 2)
UNIT_HEXAGON = LaurentQ({-3: HALF, -1: HALF, 1: HALF, 3: HALF})


def test_dual_graph_sizes():
    assert dual_graph(build_region(RegionSpec("A"))).vertices == ()
    g = dual_graph(Region(frozenset({Tri(1, 0), Tri(1, -1)})))
    assert len(g.vertices) == 2 and len(g.edges) == 1
    g = dual_graph(region("P", n=1, x=1))
    assert len(g.vertices) == 6 and len(g.edges) == 6


def test_empty_graph_has_one_matching():
    assert matching_gf(DualGraph((), (), ())) == ONE
    assert tgf(build_region(RegionSpec("A"))) == ONE


def test_single_weighted_edge():
    w = LaurentQ({1: HALF, -1: HALF})
    assert matching_gf(DualGraph(("a",), ("b",), (("a", "b", w),))) == w


def test_unit_halved_hexagon():
    r = region("P", n=1, x=1)
    assert tgf(r) == UNIT_HEXAGON
    assert tgf(r, "backtrack") == UNIT_HEXAGON
    assert tiling_count(r) == 2


def test_engines_agree():
    for spec in (dict(family="R3", x=2, s=(1, 3)), dict(family="S", x=1, u=1, d=2, l=(1,), h=(1,))):
        r = build_region(RegionSpec(**spec))
        assert matching_gf(dual_graph(r)) == matching_gf_profile(r)


def test_weighted_count_at_one():
    r = region("Pprime", n=1, x=1)
    assert weighted_count_at_one(r) == tgf(r).eval_at_one()
    assert weighted_count_at_one(r) != tiling_count(r)


def test_unbalanced_is_zero():
    assert not tgf(Region(frozenset({Tri(1, 0)})))
