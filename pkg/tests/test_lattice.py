import pytest

from tgflab.lattice import LEFT, RIGHT, VERTICAL, Tri, down_tri, lozenge_of, lozenges_within, neighbors, render, up_tri


def test_orientation_parity():
    assert Tri(1, 0).up
    assert not Tri(0, 0).up
    with pytest.raises(ValueError):
        up_tri(0, 0)
    with pytest.raises(ValueError):
        down_tri(1, 0)


def test_neighbors_have_opposite_orientation():
    for t in (Tri(1, 0), Tri(2, 0), Tri(-3, 4)):
        assert all(nb.up != t.up for nb in neighbors(t))
        assert all(t in neighbors(nb) for nb in neighbors(t))


def test_lozenge_orientations():
    up = Tri(1, 0)
    assert lozenge_of(up, Tri(0, 0)).orientation == LEFT
    assert lozenge_of(up, Tri(2, 0)).orientation == RIGHT
    vert = lozenge_of(Tri(1, 0), Tri(1, -1))
    assert vert.orientation == VERTICAL
    assert vert.center[0] == 1
    with pytest.raises(ValueError):
        lozenge_of(up, Tri(5, 0))


def test_lozenges_within_counts_interior_edges():
    cells = {Tri(0, 0), Tri(1, 0), Tri(2, 0)}
    assert len(lozenges_within(cells)) == 2


def test_render():
    assert render(()) == ""
    assert render({Tri(0, 0), Tri(1, 0)}, {Tri(2, 0)}, axis=0) == "v^*\n|"
