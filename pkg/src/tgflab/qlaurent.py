"""Exact Laurent polynomials in one variable ``q`` with rational coefficients.

Values are stored as ``q**low * (c0 + c1*q + c2*q**2 + ...) / den`` where the
``ci`` are Python ints, ``den > 0`` and ``gcd(c0, c1, ..., den) == 1``.  The
outer coefficients ``c0`` and ``c[-1]`` are never zero, so two equal values
always have identical storage.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentQ",
    "InexactDivision",
    "monomial",
    "add",
    "mul",
    "div_exact",
    "eval_at_one",
    "reverse",
    "substitute_q2",
    "ZERO",
    "ONE",
    "Q",
]

Coeff = Union[int, Fraction]

# Exponents are plain ints; anything beyond this is a bug, not a big region.
_EXP_LIMIT = 1 << 62


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial does not divide another one."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _check_exp(e: int) -> int:
    if not -_EXP_LIMIT < e < _EXP_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


class LaurentQ:
    """Immutable exact Laurent polynomial in ``q``."""

    __slots__ = ("_low", "_coeffs", "_den", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        if not terms:
            self._set(0, (), 1)
            return
        items = sorted((int(e), _as_fraction(c)) for e, c in terms.items())
        den = 1
        for _, c in items:
            den = den * c.denominator // math.gcd(den, c.denominator)
        low = items[0][0]
        coeffs = [0] * (items[-1][0] - low + 1)
        for e, c in items:
            coeffs[e - low] += c.numerator * (den // c.denominator)
        self._set(*_normalize(low, coeffs, den))

    def _set(self, low: int, coeffs: tuple, den: int) -> None:
        self._low = low
        self._coeffs = coeffs
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, low: int, coeffs, den: int = 1) -> "LaurentQ":
        obj = cls.__new__(cls)
        obj._set(*_normalize(low, coeffs, den))
        return obj

    @classmethod
    def from_coeffs(cls, low: int, coeffs: Iterable[Coeff], den: int = 1) -> "LaurentQ":
        """Build ``q**low * sum(coeffs[k] q**k) / den`` (coefficients may be Fractions)."""
        coeffs = list(coeffs)
        if den <= 0:
            raise ValueError("denominator must be positive")
        if any(isinstance(c, Fraction) for c in coeffs):
            return cls({low + k: _as_fraction(c) / den for k, c in enumerate(coeffs) if c})
        return cls._raw(low, coeffs, den)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient map, in increasing exponent order."""
        return {
            self._low + k: Fraction(c, self._den)
            for k, c in enumerate(self._coeffs)
            if c
        }

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self._low

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self._low + len(self._coeffs) - 1

    @property
    def denominator(self) -> int:
        """Common denominator of all coefficients (lowest terms)."""
        return self._den

    def coefficient(self, e: int) -> Fraction:
        k = e - self._low
        if 0 <= k < len(self._coeffs):
            return Fraction(self._coeffs[k], self._den)
        return Fraction(0)

    def integer_coefficients(self) -> tuple[int, tuple[int, ...], int]:
        """``(low, numerators, den)`` with the dense numerator tuple."""
        return self._low, self._coeffs, self._den

    def __len__(self) -> int:
        return sum(1 for c in self._coeffs if c)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentQ.constant(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return (
            self._coeffs == other._coeffs
            and self._den == other._den
            and (not self._coeffs or self._low == other._low)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._low if self._coeffs else 0, self._coeffs, self._den))
        return self._hash

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c) -> "LaurentQ":
        c = _as_fraction(c)
        return cls._raw(0, [c.numerator], c.denominator)

    @classmethod
    def monomial(cls, c, e: int) -> "LaurentQ":
        c = _as_fraction(c)
        return cls._raw(_check_exp(int(e)), [c.numerator], c.denominator)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "LaurentQ":
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ.constant(other)
        return NotImplemented

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._raw(self._low, [-c for c in self._coeffs], self._den)

    def __pos__(self) -> "LaurentQ":
        return self

    def __add__(self, other) -> "LaurentQ":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        a, b = self, other
        g = math.gcd(a._den, b._den)
        fa, fb = b._den // g, a._den // g
        den = a._den * fa
        low = min(a._low, b._low)
        high = max(a._low + len(a._coeffs), b._low + len(b._coeffs))
        out = [0] * (high - low)
        off = a._low - low
        for k, c in enumerate(a._coeffs):
            out[off + k] = c * fa
        off = b._low - low
        for k, c in enumerate(b._coeffs):
            out[off + k] += c * fb
        return LaurentQ._raw(low, out, den)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentQ":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQ":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "LaurentQ":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for k, c in enumerate(b):
            if c:
                for t, d in enumerate(a, k):
                    out[t] += c * d
        return LaurentQ._raw(
            _check_exp(self._low + other._low), out, self._den * other._den
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentQ":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self) != 1:
                raise InexactDivision("only monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentQ.monomial(1 / c ** -k, -e * -k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> "LaurentQ":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div_exact(self, other)

    def scale(self, c) -> "LaurentQ":
        """Multiply every coefficient by the rational ``c``."""
        c = _as_fraction(c)
        return LaurentQ._raw(self._low, [x * c.numerator for x in self._coeffs], self._den * c.denominator)

    def shift(self, e: int) -> "LaurentQ":
        """Multiply by ``q**e``."""
        return LaurentQ._raw(_check_exp(self._low + e), list(self._coeffs), self._den)

    def reverse(self) -> "LaurentQ":
        """Apply ``q -> 1/q``."""
        if not self._coeffs:
            return self
        return LaurentQ._raw(-self.max_exp, self._coeffs[::-1], self._den)

    def substitute_q2(self) -> "LaurentQ":
        """Apply ``q -> q**2``."""
        out = [0] * (2 * len(self._coeffs) - 1) if self._coeffs else []
        out[::2] = self._coeffs
        return LaurentQ._raw(2 * self._low, out, self._den)

    def eval_at_one(self) -> Fraction:
        return Fraction(sum(self._coeffs), self._den)

    def evaluate(self, q) -> Fraction:
        """Evaluate at a nonzero rational ``q``."""
        q = _as_fraction(q)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * q ** e
        return total

    def is_palindromic(self) -> bool:
        return self.reverse() == self

    # -- serialization --------------------------------------------------

    def to_json(self) -> list[list]:
        """Canonical ``[[exponent, "num/den"], ...]`` in increasing exponent order."""
        out = []
        for e, c in self.terms.items():
            out.append([e, f"{c.numerator}/{c.denominator}"])
        return out

    @classmethod
    def from_json(cls, data) -> "LaurentQ":
        return cls({int(e): Fraction(c) for e, c in data})

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.terms.items():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if c == 1 else f"{c}*{var}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _normalize(low: int, coeffs, den: int) -> tuple[int, tuple, int]:
    start = 0
    n = len(coeffs)
    while start < n and not coeffs[start]:
        start += 1
    if start == n:
        return 0, (), 1
    end = n
    while not coeffs[end - 1]:
        end -= 1
    coeffs = tuple(coeffs[start:end])
    if den != 1:
        g = math.gcd(den, *coeffs)
        if g != 1:
            coeffs = tuple(c // g for c in coeffs)
            den //= g
    return low + start, coeffs, den


def monomial(c, e: int) -> LaurentQ:
    """``c * q**e``; the zero polynomial when ``c == 0``."""
    return LaurentQ.monomial(c, e)


def add(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a + b


def mul(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a * b


def div_exact(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Return ``c`` with ``a == b * c``; raise :class:`InexactDivision` otherwise."""
    if not b._coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._coeffs:
        return ZERO
    # a/b = (q^la A/da) / (q^lb B/db) = q^(la-lb) * (A*db) / (B*da)
    num = [c * b._den for c in a._coeffs]
    dv = b._coeffs
    nb = len(dv)
    if len(num) < nb:
        raise InexactDivision(f"{b} does not divide {a}")
    lead = dv[-1]
    quot: list[Coeff] = [0] * (len(num) - nb + 1)
    rem: list[Coeff] = list(num)
    for k in range(len(quot) - 1, -1, -1):
        r = rem[k + nb - 1]
        if not r:
            continue
        c = r // lead if isinstance(r, int) and r % lead == 0 else Fraction(r, 1) / lead
        quot[k] = c
        for t in range(nb):
            rem[k + t] -= c * dv[t]
    if any(rem[: nb - 1]):
        raise InexactDivision(f"{b} does not divide {a}")
    return LaurentQ.from_coeffs(a._low - b._low, quot, a._den)


def eval_at_one(a: LaurentQ) -> Fraction:
    return a.eval_at_one()


def reverse(a: LaurentQ) -> LaurentQ:
    return a.reverse()


def substitute_q2(a: LaurentQ) -> LaurentQ:
    return a.substitute_q2()


ZERO = LaurentQ()
ONE = LaurentQ.constant(1)
Q = LaurentQ.monomial(1, 1)
