from fractions import Fraction
from itertools import combinations

import pytest

from tgflab import formulas
from tgflab.formulas import (
    ExponentContext,
    angle_sum,
    exponents,
    f_weight,
    family_formula,
    halved_formula,
    poly_P,
    poly_Q,
    q2_factorial,
    q2_integer,
    quartered_formula,
    reciprocity_holds,
    rewritten_A_B,
    shifted_quartered_formula,
)
from tgflab.matchgen import tgf
from tgflab.qlaurent import ONE, LaurentQ
from tgflab.regions import region

HALF = Fraction(1, 2)


def test_q2_integers():
    assert q2_integer(0) == 0
    assert q2_integer(1) == ONE
    assert q2_integer(3) == LaurentQ({0: 1, 2: 1, 4: 1})
    assert q2_factorial(0) == ONE
    assert q2_factorial(3) == q2_integer(2) * q2_integer(3)


def test_angle_sum():
    assert angle_sum(5, 2) == 14
    assert angle_sum(4, 4) == 4
    assert angle_sum(1, 2) == 0


def test_f_weight():
    assert f_weight(3, 2, 1) == 7
    assert f_weight(5, 4, 2) == 48
    assert f_weight(7, 0, 3) == 0


def test_exponents_small():
    assert exponents(2, 0, 0, (), ()) == (0, 0)
    assert exponents(2, 0, 0, (), (), "EpFp") == (0, 0)
    assert exponents(1, 0, 2, (2,), ())[1] == 3


def test_exponent_context():
    ctx = ExponentContext(x=1, u=2, d=2, m=1, n=1)
    assert ctx.x_bar == ctx.x + ctx.u - ctx.n + ctx.d - ctx.m - ctx.e


def test_halved_small():
    assert halved_formula("P", 0, 3) == ONE
    assert halved_formula("P", 1, 1) == LaurentQ({-3: HALF, -1: HALF, 1: HALF, 3: HALF})
    assert halved_formula("Pprime", 1, 1) == LaurentQ({-2: HALF, 0: HALF, 2: HALF})


def test_halved_printed_product_overshoots():
    # equal for n <= 1, off by prod_{i<j} wt1(2x+i+j) from n = 2 on
    assert halved_formula("P", 1, 2, form="printed") == halved_formula("P", 1, 2)
    printed = halved_formula("P", 2, 1, form="printed")
    assert printed != tgf(region("P", n=2, x=1))
    assert printed == halved_formula("P", 2, 1) * LaurentQ({5: HALF, -5: HALF})


@pytest.mark.parametrize("n,x", [(n, x) for n in range(4) for x in range(3)])
def test_halved_matches_enumeration(n, x):
    assert halved_formula("P", n, x) == tgf(region("P", n=n, x=x))
    assert halved_formula("Pprime", n, x) == tgf(region("Pprime", n=n, x=x))


def test_quartered_small():
    assert quartered_formula(1, 3, (2,)) == ONE
    assert quartered_formula(2, 0, (1,)) == LaurentQ({-1: HALF, 1: HALF})
    assert quartered_formula(3, 1, (1, 2)) == tgf(region("R3", x=1, s=(1, 2)))


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
def test_quartered_two_forms(kind):
    for s in combinations(range(1, 6), 3):
        assert quartered_formula(kind, 2, s, form=1) == quartered_formula(kind, 2, s, form=2)


def test_quartered_rejects_bad_dents():
    with pytest.raises(ValueError):
        quartered_formula(1, 1, (2, 2))


def test_reciprocity():
    assert reciprocity_holds(1, 1, (1, 2))
    assert reciprocity_holds(2, 2, (1, 3))
    assert shifted_quartered_formula(1, (1, 3)) == quartered_formula(3, 2, (1, 3))


def test_family_formula_small():
    assert poly_P(2, 0, 0, (), ()) == ONE
    assert family_formula("A", x=1, d=3) == ONE
    assert poly_P(1, 0, 2, (2,), ()) == tgf(region("A", x=1, d=2, l=(2,)))
    assert poly_Q(1, 2, 0, (), (2,)) == tgf(region("C", x=1, u=2, h=(2,)))
    assert family_formula("D", x=1, u=2, h=(1, 2)) == tgf(region("D", x=1, u=2, h=(1, 2)))
    assert family_formula("S", x=1, u=1, d=1, l=(1,), h=(1,)) == tgf(region("S", x=1, u=1, d=1, l=(1,), h=(1,)))
    with pytest.raises(ValueError):
        family_formula("R1")


def test_printed_prefactor_is_wrong():
    args = (1, 0, 2, (1,), ())
    assert poly_P(*args, prefactor="printed") != poly_P(*args)


def test_rewritten_forms():
    assert rewritten_A_B(1, 2, (), "A") == ONE
    assert rewritten_A_B(1, 2, (2,), "A") == family_formula("A", x=1, d=2, l=(2,))
    assert rewritten_A_B(1, 1, (1,), "B") == tgf(region("B", x=1, d=1, l=(1,)))


def test_rewritten_bound_ambiguity():
    # with l_m < d only the d-bound agrees with enumeration
    truth = tgf(region("A", x=1, d=2, l=(1,)))
    assert rewritten_A_B(1, 2, (1,), "A", top="d") == truth
    assert rewritten_A_B(1, 2, (1,), "A", top="l_m") != truth


def test_rewritten_B_printed_linear_term():
    truth = tgf(region("B", x=1, d=2, l=(1, 2)))
    assert rewritten_A_B(1, 2, (1, 2), "B") == truth
    assert rewritten_A_B(1, 2, (1, 2), "B", form="printed") != truth
    assert rewritten_A_B(1, 2, (1, 2), "B", stray_n=1) != truth


def test_spec_formula_dispatch():
    for spec in (region("P", n=2, x=1).spec, region("R2", x=1, s=(2,)).spec, region("T", x=1, u=1, d=1, l=(1,), h=(1,)).spec):
        assert formulas.spec_formula(spec) == tgf(region(spec.family, **{k: v for k, v in spec.to_json().items() if k != "family"}))
