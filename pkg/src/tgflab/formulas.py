"""Closed-form tiling generating functions.

All products are built from ``q**2``-integers ``[k] = 1 + q**2 + ... + q**(2k-2)``
and divided exactly at the end, so a transcription error in any factor shows
up as :class:`~tgflab.qlaurent.InexactDivision` instead of a silently wrong
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Sequence

from .qlaurent import ONE, LaurentQ, div_exact

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def q2_integer(n: int) -> LaurentQ:
    """``[n]`` in base ``q**2``; ``[0] == 0``."""
    if n < 0:
        raise ValueError(f"q2_integer({n}) is undefined")
    return LaurentQ.from_coeffs(0, [1, 0] * (n - 1) + [1]) if n else LaurentQ()


@lru_cache(maxsize=None)
def q2_factorial(n: int) -> LaurentQ:
    if n < 0:
        raise ValueError(f"q2_factorial({n}) is undefined")
    return ONE if n == 0 else q2_factorial(n - 1) * q2_integer(n)


class _Fraction:
    """Running numerator/denominator of q2-integers, divided once at the end."""

    def __init__(self):
        self.num: list[int] = []
        self.den: list[int] = []

    def up(self, k: int):
        self.num.append(k)

    def down(self, k: int):
        self.den.append(k)

    def up_fact(self, k: int):
        self.num.extend(range(1, k + 1))

    def down_fact(self, k: int):
        self.den.extend(range(1, k + 1))

    def value(self) -> LaurentQ:
        num = sorted(self.num)
        den = sorted(self.den)
        # cancel equal factors first; what remains must still divide exactly
        i = j = 0
        keep_num, keep_den = [], []
        while i < len(num) and j < len(den):
            if num[i] == den[j]:
                i += 1
                j += 1
            elif num[i] < den[j]:
                keep_num.append(num[i])
                i += 1
            else:
                keep_den.append(den[j])
                j += 1
        keep_num += num[i:]
        keep_den += den[j:]
        if any(k <= 0 for k in keep_den):
            raise ZeroDivisionError("q2-integer [0] in a denominator")
        if any(k == 0 for k in keep_num):
            return LaurentQ()
        if any(k < 0 for k in keep_num):
            raise ValueError("negative q2-integer in a numerator")
        top = ONE
        for k in keep_num:
            top = top * q2_integer(k)
        bottom = ONE
        for k in keep_den:
            bottom = bottom * q2_integer(k)
        return div_exact(top, bottom)


def _prefactor(two_exp: int, q_exp: int) -> LaurentQ:
    return LaurentQ.monomial(Fraction(1, 2 ** two_exp) if two_exp >= 0 else 2 ** -two_exp, -q_exp)


def angle_sum(b: int, a: int) -> int:
    """``a + (a+1) + ... + b``; an empty range (``a > b``) sums to 0."""
    if a > b:
        return 0
    return (a + b) * (b - a + 1) // 2


class NonIntegral(ArithmeticError):
    pass


def f_weight(t: int, x: int, y: int) -> int:
    """``x*y*(2t + x - y) / 2``."""
    twice = x * y * (2 * t + x - y)
    if twice % 2:
        raise NonIntegral(f"f({t},{x},{y}) is not an integer")
    return twice // 2


# -- halved hexagons ----------------------------------------------------------

def _halved_printed(prime: bool, n: int, x: int) -> LaurentQ:
    fr = _Fraction()
    for i in range(1, n + 1):
        fr.down_fact(2 * i - 1)
        fr.up(2 * (x + i) - 1 if prime else 2 * (x + i))
        for j in range(i + 1, n + 1):
            fr.up(2 * (2 * x + i + j - 1) if prime else 2 * (2 * x + i + j))
            fr.up(2 * (j - i))
    shift = 1 if prime else 0
    q_exp = sum((2 * i - 1) * (2 * x + i - shift) for i in range(1, n + 1))
    return _prefactor(n * n, q_exp) * fr.value()


def _halved_surplus(prime: bool, n: int, x: int) -> LaurentQ:
    """Product of ``wt1`` weights by which the printed product overshoots."""
    out = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = 2 * x + i + j - (1 if prime else 0)
            out = out * LaurentQ({c: HALF, -c: HALF})
    return out


def halved_formula(variant: str, n: int, x: int, form: str = "corrected") -> LaurentQ:
    """TGF of the halved hexagon ``P`` (``variant='P'``) or ``P'`` (``'Pprime'``).

    ``form='printed'`` evaluates the literal product with prefactor
    ``2^(-n^2)``.  For ``n >= 2`` that value is the TGF times
    ``prod_{i<j} wt1(2x+i+j)`` (``2x+i+j-1`` for ``P'``), and it does not
    satisfy the halved-hexagon recurrence.  ``'corrected'`` (the default)
    divides that surplus out and matches enumeration.
    """
    if n < 0 or x < 0:
        raise ValueError("n and x must be non-negative")
    key = variant.lower().replace("'", "prime")
    if key not in ("p", "pprime", "pp"):
        raise ValueError(f"unknown halved-hexagon variant {variant!r}")
    prime = key != "p"
    if form not in ("corrected", "printed"):
        raise ValueError("form must be 'corrected' or 'printed'")
    value = _halved_printed(prime, n, x)
    if form == "printed":
        return value
    return div_exact(value, _halved_surplus(prime, n, x))


# -- quartered hexagons -------------------------------------------------------
#
# The evaluators take ``t = 2*s`` so that the reciprocity substitution
# ``s -> s - 1/2`` stays in integers: every q2-integer argument and every
# exponent below is an integer combination of the ``t_i``.

_KINDS = (1, 2, 3, 4)


def _check_dents(s: Sequence[int], x: int | None):
    if any(b <= a for a, b in zip(s, s[1:])):
        raise ValueError(f"dent positions must be strictly increasing: {list(s)}")
    if s and s[0] < 1:
        raise ValueError("dent positions start at 1")
    if x is not None and s and s[-1] > len(s) + x:
        raise ValueError(f"dent positions must not exceed n + x = {len(s) + x}")


def _quartered_parts(kind: int) -> tuple[int, int | None]:
    """(shift in the pair factor ``[t_i + t_j + .]``, shift in ``[t_i + .]`` or None)."""
    return {1: (-2, None), 2: (0, 0), 3: (-4, None), 4: (-2, -1)}[kind]


def _quartered_exponents(kind: int, t: Sequence[int]) -> tuple[int, int]:
    n = len(t)
    # 4 s_i == 2 t_i
    terms = list(zip(range(1, n + 1), t))
    if kind == 1:
        return n * (n - 1), sum((i - 1) * (2 * ti - 2 * i - 1) for i, ti in terms)
    if kind == 2:
        return n * n, sum((2 * i - 1) * ti - 2 * i * i + i for i, ti in terms)
    if kind == 3:
        return n * (n - 1), sum((2 * i - 2) * ti - 2 * i * i - i + 3 for i, ti in terms)
    return n * n, sum((2 * i - 1) * ti - 2 * i * i - i + 1 for i, ti in terms)


def _quartered_eval(kind: int, t: Sequence[int], form: int) -> LaurentQ:
    if kind not in _KINDS:
        raise ValueError(f"kind must be 1, 2, 3 or 4, not {kind!r}")
    pair, single = _quartered_parts(kind)
    n = len(t)
    fr = _Fraction()
    if form == 1:
        for i in range(n):
            fr.down_fact(2 * i if single is None else 2 * i + 1)
            if single is not None:
                fr.up(t[i] + single)
            for j in range(i + 1, n):
                fr.up(t[i] + t[j] + pair)
                fr.up(t[j] - t[i])
        value = fr.value()
    elif form == 2:
        for a in range(n):
            for b in range(a, n):
                if a == b and single is None:
                    continue
                fr.up(t[a] + t[b] + pair)
                fr.down(a + b + 1)
                if a < b:
                    fr.up(t[b] - t[a])
                    fr.down(b - a)
        value = fr.value()
        if single is not None:
            # the diagonal i == j of the pair product overshoots by (q^(2 t_i + 2 single) + 1)
            den = ONE
            for ti in t:
                den = den * LaurentQ({2 * ti + 2 * single: 1, 0: 1})
            value = div_exact(value, den)
    else:
        raise ValueError("form must be 1 or 2")
    two, qe = _quartered_exponents(kind, t)
    return _prefactor(two, qe) * value


def quartered_formula(kind: int, x: int, s: Sequence[int], form: int = 1) -> LaurentQ:
    """TGF of ``R^kind_x(s)``; ``form`` picks the first or second displayed product."""
    s = tuple(s)
    _check_dents(s, x)
    return _quartered_eval(kind, [2 * v for v in s], form)


def shifted_quartered_formula(kind: int, s: Sequence[int], form: int = 1) -> LaurentQ:
    """The kind-1 or kind-2 formula evaluated at ``s_i - 1/2``.

    The region is undefined there; only the product is shifted.
    """
    if kind not in (1, 2):
        raise ValueError("only kinds 1 and 2 are shifted")
    s = tuple(s)
    _check_dents(s, None)
    return _quartered_eval(kind, [2 * v - 1 for v in s], form)


def reciprocity_holds(kind: int, x: int, s: Sequence[int]) -> bool:
    """Shifted kind 1 (resp. 2) against kind 3 (resp. 4) at the same ``s``."""
    return shifted_quartered_formula(kind, s) == quartered_formula(kind + 2, x, s)


# -- halved hexagons with dents on the west side -------------------------------

@dataclass(frozen=True)
class ExponentContext:
    """Derived integers shared by the exponents and the products."""

    x: int
    u: int
    d: int
    m: int
    n: int

    @property
    def e(self) -> int:
        return min(self.u - self.n, self.d - self.m)

    @property
    def e_prime(self) -> int:
        return min(self.u - self.n, self.d - self.m + 1)

    @property
    def x_bar(self) -> int:
        return self.x + max(self.u - self.n, self.d - self.m)

    @property
    def x_tilde(self) -> int:
        return self.x + max(self.u - self.n, self.d - self.m + 1) - 1

    @property
    def t1(self) -> int:
        return 2 * (self.x + self.u - self.n - self.e) + 1

    @property
    def t2(self) -> int:
        return 2 * (self.x + self.d - self.m - self.e)

    @property
    def t1p(self) -> int:
        return 2 * (self.x + self.u - self.n - self.e_prime) + 1

    @property
    def t2p(self) -> int:
        return 2 * (self.x + self.d - self.m + 1 - self.e_prime)


def _check_lists(d: int, l: Sequence[int], u: int, h: Sequence[int]):
    for seq, top, name in ((l, d, "l"), (h, u, "h")):
        if any(b <= a for a, b in zip(seq, seq[1:])):
            raise ValueError(f"{name} must be strictly increasing: {list(seq)}")
        if seq and (seq[0] < 1 or seq[-1] > top):
            raise ValueError(f"{name} must lie in [1, {top}]: {list(seq)}")


def exponents(x: int, u: int, d: int, l: Sequence[int], h: Sequence[int], variant: str = "EF") -> tuple[int, int]:
    """``(E, F)`` or, with ``variant='EpFp'``, ``(E', F')``."""
    m, n = len(l), len(h)
    ctx = ExponentContext(x, u, d, m, n)
    prime = variant.lower() in ("epfp", "e'f'", "prime")
    t1, t2 = (ctx.t1p, ctx.t2p) if prime else (ctx.t1, ctx.t2)
    if prime:
        big = f_weight(t1 + 2 * d - m, n + 1, m)
    else:
        big = f_weight(t1 + 2 * d - m, n, m + 1)
    for i in range(1, m + 1):
        big += angle_sum(t1 + 2 * d - m - (m - i + 1), t1 + 2 * (d - l[i - 1]) - 2 * (m - i))
    for i in range(1, n + 1):
        big += angle_sum(t2 + 2 * u - n - (n - i + 1), t2 + 2 * (u - h[i - 1]) - 2 * (n - i))
    small = (n + 1) * m if prime else n * (m + 1)
    small += sum(2 * li - i for i, li in enumerate(l, 1)) + sum(2 * hi - i for i, hi in enumerate(h, 1))
    return big, small


def _shared_rows(fr: _Fraction, l, h, first_single: str):
    m, n = len(l), len(h)
    for i in range(m):
        for j in range(i + 1, m):
            fr.up(2 * (l[j] - l[i]))
    for i in range(n):
        for j in range(i + 1, n):
            fr.up(2 * (h[j] - h[i]))
    for li in l:
        for hj in h:
            fr.down(2 * (li + hj))
    if first_single == "P":
        for li in l:
            fr.down_fact(2 * li - 1)
        for hj in h:
            fr.down_fact(2 * hj)
    else:
        for li in l:
            fr.down_fact(2 * li)
        for hj in h:
            fr.down_fact(2 * hj - 1)


def poly_P(x: int, u: int, d: int, l: Sequence[int], h: Sequence[int], prefactor: str = "swapped") -> LaurentQ:
    """The ``P`` product; ``prefactor='printed'`` uses ``2^-E q^-F`` literally.

    The default applies ``2^-F q^-E``: ``F`` counts vertical lozenges and
    ``E`` is the q-degree, which is what enumeration confirms.
    """
    l, h = tuple(l), tuple(h)
    _check_lists(d, l, u, h)
    m, n = len(l), len(h)
    xb = ExponentContext(x, u, d, m, n).x_bar
    fr = _Fraction()
    _shared_rows(fr, l, h, "P")
    for i in range(1, ceil(m / 2) + 1):
        for j in range(1, 2 * m - 4 * i + 4):
            fr.up(2 * xb + 2 * i + j - 1)
    for i in range(1, n + 1):
        fr.up(2 * (xb + m + i))
        for j in range(1, m + i + 1):
            fr.up(2 * xb + m + i + j)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            fr.up(2 * (xb + i + j - 1))
            fr.down(2 * (xb + i + j - 1) + 1)
    for i in range(1, m + 1):
        for j in range(1, l[i - 1] - i + 1):
            fr.up(2 * (xb + i + j + n))
            fr.up(2 * (xb - i - j + m + 1))
    for i in range(1, n + 1):
        for j in range(1, h[i - 1] - i + 1):
            fr.up(2 * (xb + i + j + m))
            fr.up(2 * (xb - i - j + n + 1))
    big, small = exponents(x, u, d, l, h, "EF")
    two, qe = (big, small) if prefactor == "printed" else (small, big)
    return _prefactor(two, qe) * fr.value()


def poly_Q(x: int, u: int, d: int, l: Sequence[int], h: Sequence[int], prefactor: str = "swapped") -> LaurentQ:
    """The ``Q`` product; see :func:`poly_P` for ``prefactor``."""
    l, h = tuple(l), tuple(h)
    _check_lists(d, l, u, h)
    m, n = len(l), len(h)
    xt = ExponentContext(x, u, d, m, n).x_tilde
    fr = _Fraction()
    _shared_rows(fr, l, h, "Q")
    for i in range(1, ceil(n / 2) + 1):
        for j in range(1, 2 * n - 4 * i + 4):
            fr.up(2 * xt + 2 * i + j)
    for i in range(1, m + 1):
        fr.up(2 * (xt + n + i))
        fr.up(2 * (xt + n + i + 1))
        for j in range(1, n + i):
            fr.up(2 * xt + n + i + j + 1)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            fr.up(2 * (xt + i + j - 1))
            fr.down(2 * (xt + i + j - 1) + 1)
    for i in range(1, m + 1):
        for j in range(1, l[i - 1] - i + 1):
            fr.up(2 * (xt + i + j + n + 1))
            fr.up(2 * (xt - i - j + m + 1))
    for i in range(1, n + 1):
        for j in range(1, h[i - 1] - i + 1):
            fr.up(2 * (xt + i + j + m))
            fr.up(2 * (xt - i - j + n + 2))
    big, small = exponents(x, u, d, l, h, "EpFp")
    two, qe = (big, small) if prefactor == "printed" else (small, big)
    return _prefactor(two, qe) * fr.value()


def family_formula(family: str, x: int = 0, u: int = 0, d: int = 0, l: Sequence[int] = (), h: Sequence[int] = (), **kw) -> LaurentQ:
    """Closed form for families A, B, C, D, S and T."""
    fam = family.upper()
    if fam == "A":
        return poly_P(x, 0, d, l, (), **kw)
    if fam == "B":
        return poly_Q(x, 0, d, l, (), **kw)
    if fam == "C":
        return poly_Q(x, u, 0, (), h, **kw)
    if fam == "D":
        return poly_P(x, u, 0, (), h, **kw)
    if fam == "S":
        return poly_P(x, u, d, l, h, **kw)
    if fam == "T":
        return poly_Q(x, u, d, l, h, **kw)
    raise ValueError(f"no closed form for family {family!r}")


# -- rewritten one-sided forms -------------------------------------------------

def rewritten_exponents(x: int, d: int, l: Sequence[int], variant: str, top: str = "l_m", form: str = "corrected") -> tuple[int, int]:
    """Exponents of the rewritten A (``E``, ``F``) or B (``E'``, ``F'``) form.

    ``top='l_m'`` uses ``2(l_m - l_i)`` in the lower summation bound as the
    rewritten form does; ``top='d'`` uses ``2(d - l_i)`` as the general
    definition does.  They agree when ``l_m == d``.
    """
    m = len(l)
    ceiling = (l[-1] if l else 0) if top == "l_m" else d
    big = 0
    for i, li in enumerate(l, 1):
        big += angle_sum(2 * x + 1 + 2 * d - m - (m - i + 1), 2 * x + 1 + 2 * (ceiling - li) - 2 * (m - i))
    small = sum(2 * li - i for i, li in enumerate(l, 1))
    if variant.upper() == "B":
        linear = m * (4 * x + 4 * d - 3 * m + 3)
        big += linear if form == "printed" else f_weight(2 * x + 1 + 2 * d - m, 1, m)
        small += m
    return big, small


def rewritten_A_B(
    x: int, d: int, l: Sequence[int], variant: str = "A", top: str = "l_m", stray_n: int = 0, form: str = "corrected"
) -> LaurentQ:
    """The one-sided A/B products written without ``u``, ``h``.

    ``stray_n`` is the value given to the ``n`` that appears in the B
    product although B regions carry no upper bumps; 0 is the value that
    matches enumeration.
    """
    l = tuple(l)
    _check_lists(d, l, 0, ())
    m = len(l)
    y = x + d - m
    fr = _Fraction()
    for i in range(m):
        for j in range(i + 1, m):
            fr.up(2 * (l[j] - l[i]))
    variant = variant.upper()
    if variant == "A":
        for li in l:
            fr.down_fact(2 * li - 1)
        for i in range(1, ceil(m / 2) + 1):
            for j in range(1, 2 * m - 4 * i + 4):
                fr.up(2 * y + 2 * i + j - 1)
        for i in range(1, m + 1):
            for j in range(1, l[i - 1] - i + 1):
                fr.up(2 * (y + i + j))
                fr.up(2 * (y - i - j + m + 1))
    elif variant == "B":
        for li in l:
            fr.down_fact(2 * li)
        for i in range(1, m + 1):
            fr.up(2 * (y + stray_n + i))
            fr.up(2 * (y + i + 1))
            for j in range(1, i):
                fr.up(2 * y + i + j + 1)
            for j in range(1, l[i - 1] - i + 1):
                fr.up(2 * (y + i + j + 1))
                fr.up(2 * (y - i - j + m + 1))
    else:
        raise ValueError("variant must be 'A' or 'B'")
    big, small = rewritten_exponents(x, d, l, variant, top, form)
    return _prefactor(small, big) * fr.value()


def spec_formula(spec) -> LaurentQ:
    """Closed form for a :class:`~tgflab.regions.RegionSpec` of any family."""
    fam = spec.family
    if fam in ("P", "Pprime"):
        return halved_formula(fam, spec.n, spec.x)
    if fam.startswith("R"):
        return quartered_formula(int(fam[1]), spec.x, spec.s)
    return family_formula(fam, x=spec.x, u=spec.u, d=spec.d, l=spec.l, h=spec.h)
