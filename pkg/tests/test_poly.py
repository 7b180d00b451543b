from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from qmsw.exactq import QPoly, poly_gcd, poly_xgcd

from oracles import q
from strategies import nonzero_polys, polys


def as_sympy(p):
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], q, domain="QQ")


def test_zero_polynomial_has_degree_minus_one():
    assert QPoly().degree == -1
    assert QPoly([0, 0]).is_zero()


def test_trailing_zeros_are_stripped():
    assert QPoly([1, 2, 0, 0]) == QPoly([1, 2])
    assert QPoly([1, 2, 0]).degree == 1


def test_monomial_and_shift():
    assert QPoly.monomial(3) == QPoly([0, 0, 0, 1])
    assert QPoly([1, 1]).shift(2) == QPoly([0, 0, 1, 1])


def test_evaluation_is_exact():
    p = QPoly([Fraction(1, 3), 0, 2])
    assert p(Fraction(1, 2)) == Fraction(1, 3) + Fraction(1, 2)


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert as_sympy(a * b) == as_sympy(a) * as_sympy(b)


@given(polys, nonzero_polys)
def test_division_with_remainder(a, b):
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=200)
def test_gcd_matches_sympy_and_is_monic(a, b):
    g = poly_gcd(a, b)
    assert g.leading == 1
    assert as_sympy(g).monic() == sp.gcd(as_sympy(a), as_sympy(b)).monic()


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=200)
def test_bezout_identity(a, b):
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g
    assert g == poly_gcd(a, b)


def test_exact_division_rejects_remainders():
    assert QPoly([-1, 0, 1]).exact_div(QPoly([1, 1])) == QPoly([-1, 1])
    with pytest.raises(ArithmeticError):
        QPoly([1, 0, 1]).exact_div(QPoly([1, 1]))
