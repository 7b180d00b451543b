from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qmsw.exactq import (
    CycloElement,
    PoleError,
    QPoly,
    RatFunc,
    RootPoleError,
    cyclotomic_polynomial,
    q_integer,
    to_cyclo,
)
from qmsw.roots import reflection_holds

from strategies import ratfuncs

levels = st.integers(2, 12)


def safe_cyclo(f, N):
    try:
        return to_cyclo(f, N)
    except RootPoleError:
        return None


def test_reduction_examples():
    assert to_cyclo(RatFunc(QPoly([0, 1])), 3) == CycloElement.generator(3)
    assert to_cyclo(RatFunc(1, QPoly([1, 1])), 3) == -CycloElement.generator(3)


def test_pole_at_the_root():
    with pytest.raises(RootPoleError):
        to_cyclo(RatFunc(1, q_integer(3)), 3)
    # a root pole is a pole
    assert issubclass(RootPoleError, PoleError)


def test_generator_has_exact_order():
    for N in range(2, 13):
        z = CycloElement.generator(N)
        assert z**N == CycloElement.constant(N, 1)
        assert all(z**d != CycloElement.constant(N, 1) for d in range(1, N))


def test_cyclotomic_polynomial_vanishes():
    for N in range(1, 13):
        assert to_cyclo(RatFunc(cyclotomic_polynomial(N)), N).is_zero()


@given(ratfuncs, ratfuncs, levels)
@settings(max_examples=300)
def test_reduction_is_a_ring_homomorphism(f, g, N):
    a, b = safe_cyclo(f, N), safe_cyclo(g, N)
    assume(a is not None and b is not None)
    assert to_cyclo(f * g, N) == a * b
    assert to_cyclo(f + g, N) == a + b


@given(ratfuncs, levels)
@settings(max_examples=200)
def test_inverse_in_the_field(f, N):
    a = safe_cyclo(f, N)
    assume(a is not None and not a.is_zero())
    assert a * a.inverse() == CycloElement.constant(N, 1)


@given(ratfuncs, ratfuncs, st.integers(2, 10), st.integers(1, 9))
@settings(max_examples=200)
def test_galois_action_is_a_ring_automorphism(f, g, N, a):
    assume(gcd(a, N) == 1)
    x, y = safe_cyclo(f, N), safe_cyclo(g, N)
    assume(x is not None and y is not None)
    assert (x * y).galois(a) == x.galois(a) * y.galois(a)
    assert (x + y).galois(a) == x.galois(a) + y.galois(a)
    assert CycloElement.generator(N).galois(a) == CycloElement.generator(N) ** a


def test_galois_needs_a_unit():
    with pytest.raises(ValueError):
        CycloElement.generator(6).galois(2)


@pytest.mark.parametrize("N", range(2, 11))
def test_reflection_at_the_root(N):
    z = CycloElement.generator(N)
    for n in range(1, N):
        lhs = to_cyclo(RatFunc(1, q_integer(N - n)), N)
        rhs = -(z**n) * to_cyclo(RatFunc(1, q_integer(n)), N)
        assert lhs == rhs
        assert reflection_holds(n, N)
