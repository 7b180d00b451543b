"""
Arithmetic backends for the sum evaluators.

An evaluator only needs a handful of constructors plus ``+``, ``-`` and ``*``
on the values they return.  ``FAST`` keeps denominators factored into
cyclotomic polynomials; ``REFERENCE`` reduces to canonical :class:`RatFunc`
after every operation and is used to cross-check the fast path.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .local import CycloFraction, q_binomial_exps
from .poly import QPoly
from .qnumbers import q_binomial, q_integer
from .ratfunc import RAT_ONE, RAT_ZERO, RatFunc


class Backend:
    name = "abstract"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def integer(self, c: int):
        raise NotImplementedError

    def qpow(self, s: int):
        """``q**s``; ``s`` may be negative."""
        raise NotImplementedError

    def inv_qint(self, m: int, power: int = 1):
        """``1 / [m]_q**power`` for ``m >= 1``."""
        raise NotImplementedError

    def qbinom(self, n: int, m: int):
        raise NotImplementedError

    def q_over(self, shift: int, dens):
        """``q**shift / prod [d]_q`` over ``d`` in ``dens`` (repeats allowed)."""
        t = self.qpow(shift)
        for d in dens:
            t = t * self.inv_qint(d)
        return t

    def q_over_sum(self, terms):
        """Sum of :meth:`q_over` over ``(shift, dens)`` pairs."""
        acc = self.zero
        for shift, dens in terms:
            acc = acc + self.q_over(shift, dens)
        return acc

    def inv_qbinom(self, n: int, m: int):
        raise NotImplementedError

    def to_ratfunc(self, x) -> RatFunc:
        raise NotImplementedError

    def connector(self, m: int, n: int, top: int):
        """``binom(n, m)_q / binom(top, m)_q``, zero when ``m > n``."""
        if m > n:
            return self.zero
        return self.qbinom(n, m) * self.inv_qbinom(top, m)


class FastBackend(Backend):
    name = "fast"

    @property
    def zero(self):
        return CycloFraction()

    @property
    def one(self):
        return CycloFraction((1,))

    def integer(self, c: int):
        return CycloFraction.integer(c)

    @lru_cache(maxsize=None)
    def qpow(self, s: int):
        return CycloFraction.q_power(s)

    @lru_cache(maxsize=None)
    def inv_qint(self, m: int, power: int = 1):
        if m < 1:
            raise ZeroDivisionError(f"[{m}]_q is zero")
        return CycloFraction.inv_q_integer(m, power)

    def q_over(self, shift: int, dens):
        if any(d < 1 for d in dens):
            raise ZeroDivisionError("[0]_q is zero")
        return CycloFraction.q_over(shift, dens)

    def q_over_sum(self, terms):
        # terms sharing a denominator differ only in their q-power, so collect
        # an integer polynomial per denominator before any cyclotomic work
        groups: dict = {}
        for shift, dens in terms:
            key = tuple(sorted(dens))
            poly = groups.setdefault(key, Counter())
            poly[shift] += 1
        acc = self.zero
        for key, poly in groups.items():
            if key and key[0] < 1:
                raise ZeroDivisionError("[0]_q is zero")
            low = min(poly)
            num = [0] * (max(poly) - low + 1)
            for e, c in poly.items():
                num[e - low] += c
            acc = acc + CycloFraction(tuple(num), CycloFraction.q_over(0, key).exps, low)
        return acc

    @lru_cache(maxsize=None)
    def qbinom(self, n: int, m: int):
        p = q_binomial(n, m)
        return CycloFraction(tuple(int(c) for c in p.coeffs))

    @lru_cache(maxsize=None)
    def inv_qbinom(self, n: int, m: int):
        if m > n:
            raise ZeroDivisionError(f"binomial ({n} choose {m})_q is zero")
        return CycloFraction((1,), q_binomial_exps(n, m))

    @lru_cache(maxsize=None)
    def connector(self, m: int, n: int, top: int):
        return Backend.connector(self, m, n, top)

    def to_ratfunc(self, x) -> RatFunc:
        return x.to_ratfunc()


class ReferenceBackend(Backend):
    name = "reference"

    @property
    def zero(self):
        return RAT_ZERO

    @property
    def one(self):
        return RAT_ONE

    def integer(self, c: int):
        return RatFunc(c)

    @lru_cache(maxsize=None)
    def qpow(self, s: int):
        if s >= 0:
            return RatFunc(QPoly.monomial(s))
        return RatFunc(1, QPoly.monomial(-s))

    @lru_cache(maxsize=None)
    def inv_qint(self, m: int, power: int = 1):
        if m < 1:
            raise ZeroDivisionError(f"[{m}]_q is zero")
        return RatFunc(1, q_integer(m) ** power)

    @lru_cache(maxsize=None)
    def qbinom(self, n: int, m: int):
        return RatFunc(q_binomial(n, m))

    @lru_cache(maxsize=None)
    def inv_qbinom(self, n: int, m: int):
        if m > n:
            raise ZeroDivisionError(f"binomial ({n} choose {m})_q is zero")
        return RatFunc(1, q_binomial(n, m))

    def to_ratfunc(self, x) -> RatFunc:
        return x


class _Counted:
    __slots__ = ("v", "ops")

    def __init__(self, v, ops: Counter):
        self.v = v
        self.ops = ops

    def __add__(self, other):
        self.ops["add"] += 1
        return _Counted(self.v + other.v, self.ops)

    def __sub__(self, other):
        self.ops["add"] += 1
        return _Counted(self.v - other.v, self.ops)

    def __neg__(self):
        return _Counted(-self.v, self.ops)

    def __mul__(self, other):
        self.ops["mul"] += 1
        return _Counted(self.v * other.v, self.ops)

    def is_zero(self):
        return self.v.is_zero()


class CountingBackend(Backend):
    """Wraps another backend and tallies ring additions and multiplications."""

    def __init__(self, base: Backend):
        self.base = base
        self.ops: Counter = Counter()
        self.name = f"counting({base.name})"

    def _w(self, v):
        return _Counted(v, self.ops)

    @property
    def zero(self):
        return self._w(self.base.zero)

    @property
    def one(self):
        return self._w(self.base.one)

    def integer(self, c):
        return self._w(self.base.integer(c))

    def qpow(self, s):
        return self._w(self.base.qpow(s))

    def inv_qint(self, m, power=1):
        return self._w(self.base.inv_qint(m, power))

    def qbinom(self, n, m):
        return self._w(self.base.qbinom(n, m))

    def inv_qbinom(self, n, m):
        return self._w(self.base.inv_qbinom(n, m))

    def connector(self, m, n, top):
        return self._w(self.base.connector(m, n, top))

    def to_ratfunc(self, x):
        return self.base.to_ratfunc(x.v)

    @property
    def ring_ops(self) -> int:
        return self.ops["add"] + self.ops["mul"]


FAST = FastBackend()
REFERENCE = ReferenceBackend()


def get_backend(name) -> Backend:
    if isinstance(name, Backend):
        return name
    if name == "fast":
        return FAST
    if name == "reference":
        return REFERENCE
    raise ValueError(f"unknown backend {name!r}")

