import random

import pytest

from tgflab import kuo
from tgflab.kuo import KuoPreconditionError, kuo_identity_balanced, kuo_identity_unbalanced
from tgflab.matchgen import DualGraph, dual_graph
from tgflab.qlaurent import ONE
from tgflab.regions import region

SQUARE = DualGraph(("a", "c"), ("b", "d"), (("a", "b", ONE), ("c", "b", ONE), ("c", "d", ONE), ("a", "d", ONE)))
SQUARE_POS = {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)}

# u - a - v - s - w, a tree with one face
PATH = DualGraph(("u", "v", "w"), ("a", "s"), (("u", "a", ONE), ("v", "a", ONE), ("v", "s", ONE), ("w", "s", ONE)))
PATH_POS = {name: (k, 0) for k, name in enumerate(("u", "a", "v", "s", "w"))}


def test_square():
    assert kuo_identity_balanced(SQUARE, "a", "b", "c", "d", positions=SQUARE_POS)


def test_path():
    assert kuo_identity_unbalanced(PATH, "u", "v", "w", "s", positions=PATH_POS)


def test_preconditions():
    with pytest.raises(KuoPreconditionError, match="colour classes"):
        kuo_identity_balanced(PATH, "u", "a", "v", "s", positions=PATH_POS)
    with pytest.raises(KuoPreconditionError, match="opposite"):
        kuo_identity_balanced(SQUARE, "a", "c", "b", "d", positions=SQUARE_POS)
    with pytest.raises(KuoPreconditionError, match="larger class"):
        kuo_identity_unbalanced(PATH, "u", "a", "w", "s", positions=PATH_POS)
    with pytest.raises(KuoPreconditionError, match="positions"):
        kuo_identity_balanced(SQUARE, "a", "b", "c", "d")


def test_quadruple_off_the_face_is_rejected():
    g = dual_graph(region("P", n=2, x=2))
    outer = kuo.outer_face(g)
    # a vertex that never touches the outer face
    hidden = next(t for t in g.vertices if t not in outer)
    quad = next(q for q in kuo.face_quadruples(g, outer) if g.side(q[0]) == g.side(hidden))
    with pytest.raises(KuoPreconditionError, match="cyclic order"):
        kuo_identity_balanced(g, hidden, *quad[1:])


def test_euler_formula():
    g = dual_graph(region("P", n=2, x=1))
    assert len(g.vertices) - len(g.edges) + len(kuo.faces(g)) == 2


def test_corner_choices_on_halved_hexagon():
    r = region("P", n=2, x=1)
    g = dual_graph(r)
    quads = kuo.corner_instances(r)
    assert quads
    assert all(kuo_identity_balanced(g, *q) for q in quads)


def test_dent_filled_back_in():
    r = region("R1", x=1, s=(1, 3))
    t = next(t for t in sorted(r.dents) if t.up)
    r = r.with_cells(r.cells | {t})
    g = dual_graph(r)
    quads = kuo.corner_instances(r, balanced=False, limit=40)
    assert quads
    assert all(kuo_identity_unbalanced(g, *q) for q in quads)


@pytest.mark.parametrize("balanced", [True, False])
def test_random_instances(balanced):
    rng = random.Random(5 if balanced else 6)
    check = kuo_identity_balanced if balanced else kuo_identity_unbalanced
    for _ in range(25):
        g, quad = kuo.random_instance(rng, balanced)
        assert check(g, *quad)


def test_quartered_alpha():
    assert kuo.quartered_alpha(1, (1, 3)) == (2, 2)


@pytest.mark.parametrize("which,params", [
    ("halvedP", dict(n=2, x=1)),
    ("quarteredR1", dict(x=1, s=(1, 3))),
    ("typeS", dict(x=1, u=1, d=1, l=(1,), h=(1,))),
])
def test_recurrence_examples(which, params, oracle):
    assert kuo.recurrence_check(which, oracle, **params)


@pytest.mark.parametrize("which", kuo.RECURRENCES)
def test_recurrence_grids(which, oracle):
    points = list(kuo.recurrence_grid(which, 2))
    assert all(kuo.recurrence_check(which, oracle, **p) for p in points)


def test_recurrence_preconditions():
    with pytest.raises(KuoPreconditionError):
        kuo.recurrence_check("halvedP", n=0, x=1)
    with pytest.raises(KuoPreconditionError):
        kuo.recurrence_check("typeB", x=1, d=2, l=(1,))
    with pytest.raises(ValueError, match="unknown recurrence"):
        kuo.recurrence_check("nope")
