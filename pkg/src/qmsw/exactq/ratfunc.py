"""
Elements of the field Q(q) in canonical form.

The canonical form has coprime numerator and denominator and a monic
denominator, so equality is a structural comparison.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from .poly import ONE, ZERO, QPoly, poly_gcd


class PoleError(ArithmeticError):
    """A denominator vanishes at the requested point."""


class RatFunc:
    """
    A rational function ``num / den`` over the rationals.

    >>> one_plus_q = RatFunc(QPoly([1, 1]))
    >>> RatFunc(1) / one_plus_q + RatFunc(QPoly([0, 1])) / one_plus_q
    RatFunc('1')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[QPoly, int, Fraction] = 0, den: Union[QPoly, int, Fraction] = 1):
        num = num if isinstance(num, QPoly) else QPoly([num])
        den = den if isinstance(den, QPoly) else QPoly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not den.is_one():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                num, den = num * (1 / lead), den * (1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _canonical(cls, num: QPoly, den: QPoly) -> RatFunc:
        # caller guarantees coprime num/den, monic den, and 0 stored as 0/1
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def from_poly(cls, p: QPoly) -> RatFunc:
        return cls._canonical(p, ONE)

    # -- comparisons ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field operations ----------------------------------------------

    def __add__(self, other) -> RatFunc:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            n = a + c
            if n.is_zero():
                return RAT_ZERO
            g = poly_gcd(n, b)
            if g.degree > 0:
                return RatFunc._canonical(n // g, b // g)
            return RatFunc._canonical(n, b)
        g = poly_gcd(b, d)
        if g.degree > 0:
            b1, d1 = b // g, d // g
        else:
            b1, d1 = b, d
        n = a * d1 + c * b1
        if n.is_zero():
            return RAT_ZERO
        den = b1 * d
        # only factors of g can cancel
        if g.degree > 0:
            h = poly_gcd(n, g)
            if h.degree > 0:
                n, den = n // h, den // h
        return RatFunc._canonical(n, den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._canonical(-self.num, self.den)

    def __sub__(self, other) -> RatFunc:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        return (-self) + other

    def __mul__(self, other) -> RatFunc:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RAT_ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if g1.degree > 0:
            a, d = a // g1, d // g1
        if g2.degree > 0:
            c, b = c // g2, b // g2
        num, den = a * c, b * d
        # b, d monic after dividing by monic gcds, so den stays monic
        return RatFunc._canonical(num, den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lead = self.num.leading
        return RatFunc._canonical(self.den * (1 / lead), self.num * (1 / lead))

    def __truediv__(self, other) -> RatFunc:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._canonical(self.num ** n, self.den ** n)

    # -- evaluation ----------------------------------------------------

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleError(f"denominator vanishes at q = {x}")
        return self.num(x) / d

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


RAT_ZERO = RatFunc._canonical(ZERO, ONE)
RAT_ONE = RatFunc._canonical(ONE, ONE)


def _coerce(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, QPoly):
        return RatFunc._canonical(x, ONE)
    if isinstance(x, (int, Fraction)):
        return RatFunc._canonical(QPoly([x]), ONE)
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")


def specialize_q1(f: RatFunc) -> Fraction:
    """
    Exact value of ``f`` at q = 1.

    Raises :class:`PoleError` when the denominator vanishes there; no limit is
    taken.
    """
    f = _coerce(f)
    return Fraction(f(Fraction(1)))
