"""
Exact arithmetic in Q(zeta_N), modelled as Q[q] / (Phi_N(q)).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import ZERO, QPoly, poly_xgcd
from .qnumbers import cyclotomic_polynomial, euler_phi
from .ratfunc import PoleError, _coerce


class RootPoleError(PoleError):
    """The cyclotomic polynomial divides the denominator."""


class CycloElement:
    """
    A residue class modulo ``Phi_N``; ``q`` plays the role of a primitive
    N-th root of unity.

    >>> z = CycloElement.generator(3)
    >>> (1 + z) * (-z) == 1
    True
    """

    __slots__ = ("level", "residue")

    def __init__(self, level: int, residue: QPoly):
        if level < 1:
            raise ValueError("level must be positive")
        phi = cyclotomic_polynomial(level)
        if residue.degree >= phi.degree:
            residue = residue % phi
        self.level = level
        self.residue = residue

    @classmethod
    def generator(cls, level: int) -> CycloElement:
        return cls(level, QPoly([0, 1]))

    @classmethod
    def constant(cls, level: int, c) -> CycloElement:
        return cls(level, QPoly([c]))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Residue coefficients padded to length ``phi(N)``."""
        n = euler_phi(self.level)
        c = self.residue.coeffs
        return c + (Fraction(0),) * (n - len(c))

    def _lift(self, other) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.level != self.level:
                raise ValueError(f"mixing levels {self.level} and {other.level}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.level, QPoly([other]))
        raise TypeError(f"cannot lift {type(other).__name__} into Q(zeta_{self.level})")

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.level, self.residue))

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def __add__(self, other) -> CycloElement:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return CycloElement(self.level, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self) -> CycloElement:
        return CycloElement(self.level, -self.residue)

    def __sub__(self, other) -> CycloElement:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return CycloElement(self.level, self.residue - other.residue)

    def __rsub__(self, other) -> CycloElement:
        return (-self) + other

    def __mul__(self, other) -> CycloElement:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return CycloElement(self.level, self.residue * other.residue)

    __rmul__ = __mul__

    def inverse(self) -> CycloElement:
        if self.residue.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, s, _ = poly_xgcd(self.residue, cyclotomic_polynomial(self.level))
        # Phi_N is irreducible, so any nonzero residue is a unit
        assert g.degree == 0
        return CycloElement(self.level, s)

    def __truediv__(self, other) -> CycloElement:
        other = self._lift(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> CycloElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloElement(self.level, QPoly([1]))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, a: int) -> CycloElement:
        """Image under the automorphism ``zeta_N -> zeta_N^a`` (gcd(a, N) = 1)."""
        if gcd(a, self.level) != 1:
            raise ValueError(f"exponent {a} is not a unit modulo {self.level}")
        a %= self.level
        z = CycloElement.generator(self.level) ** a
        return self.residue(z) if self.residue else CycloElement(self.level, ZERO)

    def __repr__(self) -> str:
        return f"CycloElement({self.level}, '{self.residue}')"


def to_cyclo(f, level: int) -> CycloElement:
    """
    Value of the rational function ``f`` at a primitive ``level``-th root of
    unity.

    Raises :class:`RootPoleError` if ``Phi_level`` divides the denominator.
    """
    f = _coerce(f)
    phi = cyclotomic_polynomial(level)
    den = f.den % phi
    if den.is_zero():
        raise RootPoleError(f"Phi_{level} divides the denominator")
    return CycloElement(level, f.num % phi) * CycloElement(level, den).inverse()

