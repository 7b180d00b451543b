"""
Evaluation at roots of unity and the duality between the Bradley-Zhao sum and
the sign-twisted flat sum at a primitive N-th root of unity.

Everything happens in ``Q[q]/(Phi_N)``; ``q`` stands for ``zeta_N``.  For
``0 < n < N`` we have ``1/[N-n] = -zeta^n/[n]`` at the root, which turns every
block head of the flat sum into a sign and a full q-power:

>>> verify_duality(DualityInstance((1,), 3))
True
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, List, Tuple

from .combinat import as_parts, indices_up_to
from .exactq import CycloElement, QPoly, RatFunc, q_integer, to_cyclo
from .exactq.backends import Backend
from .sums import _linear, zeta_bz, zeta_qflat


class CycloBackend(Backend):
    """
    Ring operations in ``Q(zeta_N)`` with ``q`` sent to ``zeta_N^a``.

    Only the constructors used by the linear evaluators are provided.
    """

    def __init__(self, level: int, exponent: int = 1):
        _check_level(level)
        if gcd(exponent, level) != 1:
            raise ValueError(f"exponent {exponent} is not a unit modulo {level}")
        self.level = level
        self.exponent = exponent % level
        self.name = f"cyclo({level},{self.exponent})"
        self._root = CycloElement.generator(level) ** self.exponent
        self._qpow = {}
        self._inv = {}

    @property
    def zero(self):
        return CycloElement.constant(self.level, 0)

    @property
    def one(self):
        return CycloElement.constant(self.level, 1)

    def integer(self, c: int):
        return CycloElement.constant(self.level, c)

    def qpow(self, s: int):
        s %= self.level
        if s not in self._qpow:
            self._qpow[s] = self._root ** s
        return self._qpow[s]

    def inv_qint(self, m: int, power: int = 1):
        if m % self.level == 0:
            raise ZeroDivisionError(f"[{m}] vanishes at a primitive {self.level}-th root of unity")
        key = (m, power)
        if key not in self._inv:
            qint = self.zero
            for i in range(m):
                qint = qint + self.qpow(i)
            self._inv[key] = qint.inverse() ** power
        return self._inv[key]

    def to_ratfunc(self, x):
        raise TypeError("cyclotomic values have no rational-function form")


def _check_level(N: int) -> None:
    if N < 2:
        raise ValueError(f"level must be at least 2, got {N} (every [m] vanishes when N = 1)")


@dataclass(frozen=True)
class DualityInstance:
    index: Tuple[int, ...]
    level: int

    def __post_init__(self):
        object.__setattr__(self, "index", as_parts(self.index))
        _check_level(self.level)


def bz_at_root(k, N: int) -> CycloElement:
    """
    ``zeta_bz(k, N)`` at a primitive N-th root of unity.

    >>> bz_at_root((1,), 3)
    CycloElement(3, '-q + 1')
    """
    _check_level(N)
    return to_cyclo(zeta_bz(k, N), N)


def qflat_at_root(k, N: int) -> CycloElement:
    _check_level(N)
    return to_cyclo(zeta_qflat(k, N), N)


def hessami_rhs(k, N: int, exponent: int = 1, method: str = "dp") -> CycloElement:
    """
    ``(-1)^r sum prod_j zeta^(n_j1+...+n_jk_j) / ([n_j1]...[n_jk_j])`` over the
    flat region (weak inside a block, strict between blocks), evaluated
    directly in the cyclotomic field with ``zeta = zeta_N^exponent``.

    >>> hessami_rhs((1,), 2)
    CycloElement(2, '1')
    """
    B = CycloBackend(N, exponent)
    parts = as_parts(k)
    factors, strict = [], []
    for kk in parts:
        for t in range(kk):
            factors.append(lambda n: B.qpow(n) * B.inv_qint(n))
            if factors[1:]:
                strict.append(t == 0)
    total = _linear(B, factors, strict, 1, N - 1, method)
    return -total if len(parts) % 2 else total


def verify_duality(inst: DualityInstance) -> bool:
    """Three-way equality: BZ at the root, flat sum at the root, direct right-hand side."""
    lhs = bz_at_root(inst.index, inst.level)
    return lhs == qflat_at_root(inst.index, inst.level) == hessami_rhs(inst.index, inst.level)


def duality_sides(inst: DualityInstance) -> Tuple[CycloElement, CycloElement, CycloElement]:
    return (
        bz_at_root(inst.index, inst.level),
        qflat_at_root(inst.index, inst.level),
        hessami_rhs(inst.index, inst.level),
    )


def galois_check(k, N: int, a: int) -> bool:
    """
    The automorphism ``zeta -> zeta^a`` maps the verified identity to the
    identity at the root ``zeta^a``: both sides, conjugated, equal the direct
    evaluation at ``zeta^a``.
    """
    if gcd(a, N) != 1:
        raise ValueError(f"exponent {a} is not a unit modulo {N}")
    lhs = bz_at_root(k, N).galois(a)
    rhs = hessami_rhs(k, N).galois(a)
    direct = hessami_rhs(k, N, exponent=a)
    return lhs == rhs == direct


def reflection_holds(n: int, N: int) -> bool:
    """``1/[N-n] + q^n/[n]`` vanishes at a primitive N-th root of unity."""
    if not 0 < n < N:
        raise ValueError(f"need 0 < n < N, got ({n}, {N})")
    f = RatFunc(1, q_integer(N - n)) + RatFunc(QPoly.monomial(n), q_integer(n))
    return to_cyclo(f, N).is_zero()


def reflection_suite(max_level: int = 10) -> Iterator[Tuple[int, int, bool]]:
    for N in range(2, max_level + 1):
        for n in range(1, N):
            yield n, N, reflection_holds(n, N)


def duality_grid(max_weight: int, levels) -> List[DualityInstance]:
    return [DualityInstance(k, N) for k in indices_up_to(max_weight, include_empty=True) for N in levels]
