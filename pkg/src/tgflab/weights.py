"""Lozenge weight schemes.

Only vertical lozenges carry a nontrivial weight.  With ``c`` the abscissa of
the lozenge center measured from the vertical axis:

* ``wt1`` (symmetric): ``(q**c + q**-c) / 2``
* ``wt2``: as ``wt1``, but a lozenge cut by the axis (``c == 0``) weighs 1/2
* ``wt3`` (volume): ``q**c``; the natural weight is ``q**(c/2)``, so this is
  the volume weight after ``q -> q**2``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .lattice import VERTICAL, Lozenge
from .qlaurent import ONE, LaurentQ

HALF = Fraction(1, 2)


class WeightScheme(str, enum.Enum):
    SYMMETRIC = "wt1"
    HALVED = "wt2"
    VOLUME = "wt3"

    @classmethod
    def parse(cls, name) -> "WeightScheme":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown weight scheme {name!r}; use wt1, wt2 or wt3") from None


@lru_cache(maxsize=None)
def vertical_weight(scheme: WeightScheme, c: int) -> LaurentQ:
    """Weight of a vertical lozenge whose center sits ``c`` units right of the axis."""
    scheme = WeightScheme.parse(scheme)
    if scheme is WeightScheme.VOLUME:
        return LaurentQ.monomial(1, c)
    if scheme is WeightScheme.HALVED and c == 0:
        return LaurentQ.constant(HALF)
    if c == 0:
        return ONE
    return LaurentQ({c: HALF, -c: HALF})


def lozenge_weight(scheme, loz: Lozenge, axis_offset: int = 0) -> LaurentQ:
    if loz.orientation != VERTICAL:
        return ONE
    return vertical_weight(WeightScheme.parse(scheme), int(loz.center[0]) - axis_offset)
