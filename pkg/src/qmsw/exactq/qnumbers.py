"""
q-integers, q-factorials, Gaussian binomials and cyclotomic polynomials.
"""
from __future__ import annotations

from functools import lru_cache

from .poly import ONE, ZERO, QPoly


def q_integer(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError(f"q_integer needs n >= 0, got {n}")
    return _q_integer(n)


@lru_cache(maxsize=None)
def _q_integer(n: int) -> QPoly:
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    return _q_factorial(n)


@lru_cache(maxsize=None)
def _q_factorial(n: int) -> QPoly:
    if n == 0:
        return ONE
    return _q_factorial(n - 1) * _q_integer(n)


def q_binomial(n: int, m: int) -> QPoly:
    """
    Gaussian binomial coefficient via the Pascal recurrence
    ``C(n, m) = C(n-1, m-1) + q^m C(n-1, m)``.

    Returns the zero polynomial when ``m > n`` so connectors stay total.

    >>> q_binomial(4, 2)
    QPoly('q^4 + q^3 + 2q^2 + q + 1')
    """
    if n < 0 or m < 0:
        raise ValueError(f"q_binomial needs n, m >= 0, got ({n}, {m})")
    return _q_binomial(n, m)


@lru_cache(maxsize=None)
def _q_binomial(n: int, m: int) -> QPoly:
    if m > n:
        return ZERO
    if m == 0 or m == n:
        return ONE
    return _q_binomial(n - 1, m - 1) + _q_binomial(n - 1, m).shift(m)


def q_binomial_quotient(n: int, m: int) -> QPoly:
    """Gaussian binomial as the exact quotient ``[n]! / ([m]! [n-m]!)``."""
    if m > n:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(m) * q_factorial(n - m))


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_polynomial(n: int) -> QPoly:
    """
    ``Phi_n(q)``, by exact division of ``q^n - 1`` by ``Phi_d`` for the proper
    divisors ``d`` of ``n``.

    >>> cyclotomic_polynomial(6)
    QPoly('q^2 - q + 1')
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    return _cyclotomic(n)


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> QPoly:
    p = QPoly.monomial(n) - ONE
    for d in divisors(n)[:-1]:
        p = p.exact_div(_cyclotomic(d))
    return p
