"""
Fast accumulator ring for the sum evaluators.

Every quantity the sums touch (q-powers, q-integers, Gaussian binomials and
their quotients) lies in the subring of Q(q) whose denominators are powers of
q times products of cyclotomic polynomials ``Phi_d`` with ``d >= 2``.  A
:class:`CycloFraction` stores such a value as

    q^shift * num(q) / prod_d Phi_d(q)^exps[d]

with ``num`` an integer polynomial.  Because the denominator is kept factored,
addition only needs polynomial multiplications (no gcd), and the canonical
:class:`RatFunc` is recovered at the end by trial division by each ``Phi_d``.
"""
from __future__ import annotations

from functools import lru_cache

from .poly import QPoly
from .ratfunc import RatFunc

IntPoly = tuple  # tuple[int, ...], constant term first, no trailing zeros


def _strip(c: list[int]) -> IntPoly:
    end = len(c)
    while end and c[end - 1] == 0:
        end -= 1
    return tuple(c[:end])


def ipoly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _strip(out)


def ipoly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(b) == 1:
        y = b[0]
        return tuple(x * y for x in a)
    if len(a) == 1:
        x = a[0]
        return tuple(x * y for y in b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def ipoly_divmod_monic(a: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division by a monic integer polynomial stays in Z[q]."""
    dl = len(d)
    if len(a) < dl:
        return (), a
    rem = list(a)
    quo = [0] * (len(a) - dl + 1)
    for k in range(len(a) - dl, -1, -1):
        c = rem[k + dl - 1]
        quo[k] = c
        if c:
            for i in range(dl):
                rem[k + i] -= c * d[i]
    return _strip(quo), _strip(rem[: dl - 1])


@lru_cache(maxsize=None)
def cyclotomic_int(d: int) -> IntPoly:
    # local import keeps this module usable without qnumbers' cache warm
    from .qnumbers import cyclotomic_polynomial

    return tuple(int(c) for c in cyclotomic_polynomial(d).coeffs)


@lru_cache(maxsize=None)
def _cyclo_power(d: int, e: int) -> IntPoly:
    if e == 0:
        return (1,)
    return ipoly_mul(_cyclo_power(d, e - 1), cyclotomic_int(d))


def _exps_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


@lru_cache(maxsize=None)
def q_integer_exps(m: int) -> tuple:
    """Exponent vector of ``[m]_q = prod_{d | m, d > 1} Phi_d``."""
    if m <= 0:
        raise ValueError(f"[{m}]_q has no cyclotomic factorisation")
    out = [0] * (m + 1)
    for d in range(2, m + 1):
        if m % d == 0:
            out[d] = 1
    return tuple(out)


@lru_cache(maxsize=None)
def q_binomial_exps(n: int, m: int) -> tuple:
    """Exponent vector of the Gaussian binomial ``(n choose m)_q`` for m <= n."""
    out = [0] * (n + 1)
    for d in range(2, n + 1):
        out[d] = n // d - m // d - (n - m) // d
    return tuple(out)


class CycloFraction:
    __slots__ = ("shift", "num", "exps")

    def __init__(self, num: IntPoly = (), exps: tuple = (), shift: int = 0):
        self.num = num
        self.exps = exps
        self.shift = shift

    # -- constructors ----------------------------------------------------

    @classmethod
    def integer(cls, c: int) -> CycloFraction:
        return cls((c,) if c else ())

    @classmethod
    def q_power(cls, s: int) -> CycloFraction:
        return cls((1,), (), s)

    @classmethod
    def inv_q_integer(cls, m: int, power: int = 1) -> CycloFraction:
        """``1 / [m]_q^power``."""
        e = q_integer_exps(m)
        if power != 1:
            e = tuple(x * power for x in e)
        return cls((1,), e)

    @classmethod
    def q_over(cls, shift: int, dens) -> CycloFraction:
        """``q^shift / prod_i [dens_i]_q``."""
        exps: tuple = ()
        for d in dens:
            exps = _exps_add(exps, q_integer_exps(d))
        return cls((1,), exps, shift)

    @classmethod
    def from_intpoly(cls, p: IntPoly, exps: tuple = (), shift: int = 0) -> CycloFraction:
        return cls(p, exps, shift)

    # -- arithmetic ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: CycloFraction) -> CycloFraction:
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = self, other
        ea, eb = a.exps, b.exps
        na, nb = a.num, b.num
        if ea != eb:
            width = max(len(ea), len(eb))
            ea = ea + (0,) * (width - len(ea))
            eb = eb + (0,) * (width - len(eb))
            common = []
            for d in range(width):
                x, y = ea[d], eb[d]
                if x < y:
                    na = ipoly_mul(na, _cyclo_power(d, y - x))
                    common.append(y)
                elif y < x:
                    nb = ipoly_mul(nb, _cyclo_power(d, x - y))
                    common.append(x)
                else:
                    common.append(x)
            exps = tuple(common)
        else:
            exps = ea
        sa, sb = a.shift, b.shift
        if sa < sb:
            nb = (0,) * (sb - sa) + nb
            shift = sa
        elif sb < sa:
            na = (0,) * (sa - sb) + na
            shift = sb
        else:
            shift = sa
        num = ipoly_add(na, nb)
        if not num:
            return ZERO
        return CycloFraction(num, exps, shift)

    def __neg__(self) -> CycloFraction:
        return CycloFraction(tuple(-c for c in self.num), self.exps, self.shift)

    def __sub__(self, other: CycloFraction) -> CycloFraction:
        return self + (-other)

    def __mul__(self, other: CycloFraction) -> CycloFraction:
        if not self.num or not other.num:
            return ZERO
        return CycloFraction(
            ipoly_mul(self.num, other.num),
            _exps_add(self.exps, other.exps),
            self.shift + other.shift,
        )

    def scale(self, c: int) -> CycloFraction:
        if c == 0 or not self.num:
            return ZERO
        return CycloFraction(tuple(x * c for x in self.num), self.exps, self.shift)

    # -- conversion ------------------------------------------------------

    def to_ratfunc(self) -> RatFunc:
        num = self.num
        if not num:
            return RatFunc(0)
        shift = self.shift
        # pull powers of q out of the numerator
        low = 0
        while num[low] == 0:
            low += 1
        if low:
            num = num[low:]
            shift += low
        den: IntPoly = (1,)
        for d, e in enumerate(self.exps):
            if not e:
                continue
            phi = cyclotomic_int(d)
            while e:
                quo, rem = ipoly_divmod_monic(num, phi)
                if rem:
                    break
                num = quo
                e -= 1
            if e:
                den = ipoly_mul(den, _cyclo_power(d, e))
        if shift > 0:
            num = (0,) * shift + num
        elif shift < 0:
            den = (0,) * (-shift) + den
        return RatFunc._canonical(QPoly._raw_int(num), QPoly._raw_int(den))

    def __repr__(self) -> str:
        return f"CycloFraction({self.to_ratfunc()})"


ZERO = CycloFraction()
ONE = CycloFraction((1,))


def csum(terms) -> CycloFraction:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc
