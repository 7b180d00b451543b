"""
Dense univariate polynomials in q with rational coefficients.

A polynomial is stored as a tuple of :class:`fractions.Fraction` coefficients,
constant term first, with trailing zeros stripped.  The zero polynomial is the
empty tuple and reports degree -1.

>>> QPoly([1, 1]) * QPoly([1, 1])
QPoly('q^2 + 2q + 1')
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class QPoly:
    """Immutable polynomial over the rationals."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> QPoly:
        # caller guarantees Fraction entries and no trailing zeros
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def _raw_int(cls, coeffs: tuple[int, ...]) -> QPoly:
        return cls._raw(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> QPoly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> QPoly:
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * degree + [c])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __call__(self, x):
        """Horner evaluation at ``x`` (any object supporting + and *)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        raise TypeError(f"cannot coerce {type(other).__name__} to QPoly")

    def __add__(self, other) -> QPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QPoly._raw(_strip([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)]))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> QPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QPoly._raw(_strip([a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)]))

    def __rsub__(self, other) -> QPoly:
        return (-self) + other

    def __mul__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by q**k (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return QPoly._raw((Fraction(0),) * k + self.coeffs)

    def __divmod__(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """
        Euclidean division: ``self = quo * other + rem`` with ``deg rem < deg other``.

        >>> divmod(QPoly([-1, 0, 1]), QPoly([-1, 1]))
        (QPoly('q + 1'), QPoly('0'))
        """
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dl = len(d)
        lead = d[-1]
        if len(rem) < dl:
            return ZERO, self
        quo = [Fraction(0)] * (len(rem) - dl + 1)
        for k in range(len(rem) - dl, -1, -1):
            c = rem[k + dl - 1] / lead
            quo[k] = c
            if c:
                for i in range(dl):
                    rem[k + i] -= c * d[i]
        return QPoly._raw(_strip(quo)), QPoly._raw(_strip(rem[: dl - 1]))

    def __floordiv__(self, other) -> QPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> QPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: QPoly) -> QPoly:
        quo, rem = divmod(self, other)
        if rem:
            raise ArithmeticError("division is not exact")
        return quo

    def monic(self) -> QPoly:
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return QPoly._raw(tuple(c / lead for c in self.coeffs))

    def scale(self, c: Scalar) -> QPoly:
        return self * Fraction(c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else "q" if i == 1 else f"q^{i}"
            coef = str(a) if (a != 1 or not mono) else ""
            if "/" in coef and mono:
                coef = f"({coef})"
            term = coef + mono
            if not parts:
                parts.append(term if sign == "+" else "-" + term)
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)


ZERO = QPoly._raw(())
ONE = QPoly._raw((Fraction(1),))
Q = QPoly._raw((Fraction(0), Fraction(1)))


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """
    Monic gcd over the rationals.

    Each remainder is made monic before the next step, which keeps the
    coefficient sizes from compounding.

    >>> poly_gcd(QPoly([-1, 0, 1]), QPoly([1, 2, 1]))
    QPoly('q + 1')
    """
    a, b = a.monic(), b.monic()
    while b.coeffs:
        a, b = b, (a % b).monic()
    return a


def poly_xgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1.coeffs:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not r0.coeffs:
        return ZERO, ZERO, ZERO
    lead = r0.leading
    return r0.monic(), s0 * (1 / lead), t0 * (1 / lead)
