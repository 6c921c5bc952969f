from fractions import Fraction

import pytest

from tgflab.lattice import Tri, lozenge_of
from tgflab.qlaurent import LaurentQ
from tgflab.weights import WeightScheme, lozenge_weight, vertical_weight


def test_symmetric_weight():
    assert vertical_weight("wt1", 0) == 1
    assert vertical_weight("wt1", 3) == LaurentQ({3: Fraction(1, 2), -3: Fraction(1, 2)})
    assert vertical_weight("wt1", -3) == vertical_weight("wt1", 3)


def test_halved_weight_on_axis():
    assert vertical_weight("wt2", 0) == Fraction(1, 2)
    assert vertical_weight("wt2", 2) == vertical_weight("wt1", 2)


def test_volume_weight():
    assert vertical_weight(WeightScheme.VOLUME, -2) == LaurentQ({-2: 1})


def test_only_vertical_lozenges_are_weighted():
    assert lozenge_weight("wt1", lozenge_of(Tri(3, 0), Tri(2, 0))) == 1
    assert lozenge_weight("wt1", lozenge_of(Tri(3, 0), Tri(3, -1))) == vertical_weight("wt1", 3)
    assert lozenge_weight("wt2", lozenge_of(Tri(3, 0), Tri(3, -1)), axis_offset=3) == Fraction(1, 2)


def test_unknown_scheme():
    with pytest.raises(ValueError, match="unknown weight scheme"):
        WeightScheme.parse("wt9")
