"""
The multiple harmonic q-sums and their flat counterparts.

Every sum has two evaluators:

* ``method="naive"`` enumerates the summation region point by point
  (:class:`~qmsw.combinat.Region` or the tableau stream) and adds up the
  summands;
* ``method="dp"`` runs a transfer/prefix-sum recursion along the chain of
  variables (or of diagonal tuples) and never materialises the region.

Both return canonical :class:`~qmsw.exactq.RatFunc` values, so agreement is a
structural comparison.  All sums with upper bound ``N`` range over integers in
``[1, N-1]``.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .combinat import (
    DiagIndex,
    Interval,
    LinearIndex,
    Region,
    _strict,
    _weak,
    as_parts,
    enumerate_ssyt,
    tuples_on,
)
from .exactq import RatFunc, specialize_q1
from .exactq.backends import FAST, Backend, get_backend


class SumKind(Enum):
    BZ = "bz"
    QFLAT = "qflat"
    BZ_STAR = "bz-star"
    QSTAR_FLAT = "qstar-flat"
    SCHUR_BZ = "schur-bz"
    SCHUR_QFLAT = "schur-qflat"

    @property
    def is_schur(self) -> bool:
        return self in (SumKind.SCHUR_BZ, SumKind.SCHUR_QFLAT)


class Reading(Enum):
    """
    Which coordinates of each flat layer carry a power of q in the numerator.

    ``PRINTED``       every layer drops its first coordinate;
    ``FIRST_PRIMED``  layer 1 drops its first coordinate, later layers keep all;
    ``FIRST_PLAIN``   layer 1 has no q-power, later layers keep all.

    All three agree when every diagonal has a single cell.
    """

    PRINTED = "printed"
    FIRST_PRIMED = "first-primed"
    FIRST_PLAIN = "first-plain"


DEFAULT_READING = Reading.FIRST_PLAIN


def _reading(r) -> Reading:
    if isinstance(r, Reading):
        return r
    try:
        return Reading(r)
    except ValueError:
        raise ValueError(f"unknown numerator reading {r!r}") from None


def layer_q_exponent(reading: Reading, layer: int, values: Sequence[int]) -> int:
    """q-exponent contributed by flat layer ``layer`` (1-based) with these values."""
    if reading is Reading.PRINTED:
        return sum(values[1:])
    if reading is Reading.FIRST_PRIMED:
        return sum(values[1:]) if layer == 1 else sum(values)
    if reading is Reading.FIRST_PLAIN:
        return 0 if layer == 1 else sum(values)
    raise ValueError(f"unknown numerator reading {reading!r}")


# ---------------------------------------------------------------------------
# summand factors


@lru_cache(maxsize=None)
def bz_factor(B: Backend, k: int, m: int):
    """``q^((k-1) m) / [m]^k``."""
    return B.qpow((k - 1) * m) * B.inv_qint(m, k)


@lru_cache(maxsize=None)
def tail_factor(B: Backend, n: int):
    """``q^n / [n]``: a non-first coordinate of a flat block."""
    return B.qpow(n) * B.inv_qint(n)


@lru_cache(maxsize=None)
def head_factor(B: Backend, N: int, n: int):
    """``1 / [N - n]``: the first coordinate of a flat block."""
    return B.inv_qint(N - n)


# ---------------------------------------------------------------------------
# generic engines


def region_sum(B: Backend, region: Region, term: Callable[[Tuple[int, ...]], object]):
    acc = B.zero
    for point in region.points():
        acc = acc + term(point)
    return acc


def linear_dp(B: Backend, factors: Sequence[Callable[[int], object]], strict: Sequence[bool], lo: int, hi: int):
    """
    ``sum_{x_1 R_1 x_2 R_2 ... x_r} prod_i factors[i](x_i)`` over ``[lo, hi]``,
    where ``R_i`` is ``<`` when ``strict[i]`` and ``<=`` otherwise.

    One prefix-sum sweep per variable.
    """
    if not factors:
        return B.one
    values = range(lo, hi + 1)
    f = [factors[0](v) for v in values]
    for fac, st in zip(factors[1:], strict):
        acc = B.zero
        nxt = []
        for i, v in enumerate(values):
            if st:
                nxt.append(acc * fac(v))
                acc = acc + f[i]
            else:
                acc = acc + f[i]
                nxt.append(acc * fac(v))
        f = nxt
    total = B.zero
    for x in f:
        total = total + x
    return total


class Layer:
    """A block of variables indexed by an interval, enumerated as whole tuples."""

    __slots__ = ("interval", "states", "weight")

    def __init__(self, interval: Interval, states: List[Tuple[int, ...]], weight: Callable[[Tuple[int, ...]], object]):
        self.interval = interval
        self.states = states
        self.weight = weight


def chain_dp(B: Backend, layers: Sequence[Layer], links: Sequence[Callable]):
    """
    Transfer-matrix sum over a chain of tuple layers.

    ``links[i](s, t)`` returns ``None`` when state ``s`` of layer ``i`` may not
    precede state ``t`` of layer ``i+1``, ``True`` for an admissible pair with
    no extra factor, or a ring element multiplying the pair.
    """
    if not layers:
        return B.one
    first = layers[0]
    f = [(s, first.weight(s)) for s in first.states]
    f = [(s, v) for s, v in f if not v.is_zero()]
    for layer, link in zip(layers[1:], links):
        nxt = []
        for t in layer.states:
            acc = B.zero
            for s, v in f:
                w = link(s, t)
                if w is None:
                    continue
                acc = acc + (v if w is True else v * w)
            if acc.is_zero():
                continue
            nxt.append((t, acc * layer.weight(t)))
        f = nxt
    total = B.zero
    for _, v in f:
        total = total + v
    return total


def strict_link(J: Interval, Jn: Interval):
    lo, nlo = J.lo, Jn.lo
    return lambda s, t: True if _strict(lo, s, nlo, t) else None


def weak_link(J: Interval, Jn: Interval):
    lo, nlo = J.lo, Jn.lo
    return lambda s, t: True if _weak(lo, s, nlo, t) else None


def relation_constraints(
    a_names: Dict[int, str], b_names: Dict[int, str], strict: bool
) -> List[Tuple[str, str, str]]:
    """
    Pairwise constraints expressing ``a ◁ b`` (``strict``) or ``a ⊴ b`` between
    tuples whose coordinates are the named variables.
    """
    out = []
    for j, a in a_names.items():
        if j in b_names:
            out.append((a, "<" if strict else "<=", b_names[j]))
        if j - 1 in b_names:
            out.append((b_names[j - 1], "<=" if strict else "<", a))
    return out


def _finish(B: Backend, x) -> RatFunc:
    return B.to_ratfunc(x)


def _check_method(method: str) -> None:
    if method not in ("dp", "naive"):
        raise ValueError(f"unknown evaluator {method!r}")


# ---------------------------------------------------------------------------
# linear sums


def _linear_region(n: int, strict: Sequence[bool], lo: int, hi: int) -> Region:
    names = [f"x{i}" for i in range(n)]
    cons = [(names[i], "<" if st else "<=", names[i + 1]) for i, st in enumerate(strict)]
    return Region(names, {v: (lo, hi) for v in names}, cons)


def _linear(B, factors, strict, lo, hi, method):
    _check_method(method)
    if method == "dp":
        return linear_dp(B, factors, strict, lo, hi)
    region = _linear_region(len(factors), strict, lo, hi)

    def term(point):
        t = B.one
        for fac, x in zip(factors, point):
            t = t * fac(x)
        return t

    return region_sum(B, region, term)


def _bz_value(k, N, strict: bool, method: str, backend):
    B = get_backend(backend)
    parts = as_parts(k)
    factors = [(lambda m, kk=kk: bz_factor(B, kk, m)) for kk in parts]
    return _finish(B, _linear(B, factors, [strict] * (len(parts) - 1), 1, N - 1, method))


def zeta_bz(k, N: int, method: str = "dp", backend=FAST) -> RatFunc:
    """
    Bradley-Zhao multiple harmonic q-sum
    ``sum_{0<m_1<...<m_r<N} prod q^((k_i-1) m_i) / [m_i]^k_i``.

    >>> zeta_bz((1,), 3)
    RatFunc('(q + 2)/(q + 1)')
    """
    return _bz_value(k, N, True, method, backend)


def zeta_bz_star(k, N: int, method: str = "dp", backend=FAST) -> RatFunc:
    """Star version of :func:`zeta_bz` (weak inequalities between the m's)."""
    return _bz_value(k, N, False, method, backend)


def flat_factors(B: Backend, parts: Sequence[int], N: int):
    """Per-variable factors and block structure of the flat sum, blocks flattened."""
    factors, first = [], []
    for kk in parts:
        for t in range(kk):
            first.append(t == 0)
            if t == 0:
                factors.append(lambda n: head_factor(B, N, n))
            else:
                factors.append(lambda n: tail_factor(B, n))
    return factors, first


def zeta_qflat(k, N: int, method: str = "dp", backend=FAST) -> RatFunc:
    """
    q-flat sum: blocks ``n_j1 <= ... <= n_jk_j`` joined by strict steps,
    summand ``prod_j q^(n_j2+...+n_jk_j) / ([N-n_j1][n_j2]...[n_jk_j])``.

    >>> zeta_qflat((1, 2), 3)
    RatFunc('(q^2)/(q^2 + 2q + 1)')
    """
    B = get_backend(backend)
    parts = as_parts(k)
    factors, first = flat_factors(B, parts, N)
    strict = first[1:]  # a step into a new block is strict
    return _finish(B, _linear(B, factors, strict, 1, N - 1, method))


def zeta_qstar_flat(k, N: int, method: str = "dp", backend=FAST) -> RatFunc:
    """
    Star flat sum: blocks are weak chains and the cross-block condition is
    ``n_(j-1)1 <= n_jk_j``.
    """
    _check_method(method)
    B = get_backend(backend)
    parts = as_parts(k)
    if not parts:
        return _finish(B, B.one)
    if method == "naive":
        names, bounds, cons = [], {}, []
        firsts, lasts = [], []
        for j, kk in enumerate(parts):
            block = [f"n{j}_{t}" for t in range(kk)]
            names += block
            cons += [(block[t], "<=", block[t + 1]) for t in range(kk - 1)]
            firsts.append(block[0])
            lasts.append(block[-1])
        for j in range(1, len(parts)):
            cons.append((firsts[j - 1], "<=", lasts[j]))
        for v in names:
            bounds[v] = (1, N - 1)
        factors, _ = flat_factors(B, parts, N)

        def term(point):
            t = B.one
            for fac, x in zip(factors, point):
                t = t * fac(x)
            return t

        return _finish(B, region_sum(B, Region(names, bounds, cons), term))

    values = range(1, N)
    h = None
    for j, kk in enumerate(parts):
        hj = {}
        for a in values:
            # g[b]: sum over the weak chain a <= n_2 <= ... <= n_kk = b
            g = {b: (head_factor(B, N, a) if b == a else B.zero) for b in values}
            for _ in range(kk - 1):
                acc, ng = B.zero, {}
                for b in values:
                    acc = acc + g[b]
                    ng[b] = acc * tail_factor(B, b)
                g = ng
            if h is None:
                tot = B.zero
                for b in values:
                    tot = tot + g[b]
            else:
                tot, prefix = B.zero, B.zero
                for b in values:
                    prefix = prefix + h[b]
                    if not g[b].is_zero():
                        tot = tot + g[b] * prefix
            hj[a] = tot
        h = hj
    total = B.zero
    for a in values:
        total = total + h[a]
    return _finish(B, total)


# ---------------------------------------------------------------------------
# Schur-type sums


def schur_bz_layers(B: Backend, K: DiagIndex, N: int, upto: Optional[int] = None) -> Tuple[List[Layer], List]:
    """Diagonal layers ``m_p0 ◁ ... ◁ m_upto`` with Bradley-Zhao weights."""
    diags = K.shape.diagonals()
    layers, links = [], []
    for p, J in diags:
        if upto is not None and p > upto:
            break
        kp = K.weights[p]

        def weight(s, kp=kp):
            t = B.one
            for x in s:
                t = t * bz_factor(B, kp, x)
            return t

        if layers:
            links.append(strict_link(layers[-1].interval, J))
        layers.append(Layer(J, list(tuples_on(J, 1, N - 1)), weight))
    return layers, links


def schur_flat_layers(
    B: Backend, K: DiagIndex, N: int, reading: Reading, start: Optional[int] = None
) -> Tuple[List[Layer], List]:
    """Flat layers ``n_p^(1) ⊴ ... ⊴ n_p^(k_p) ◁ n_(p+1)^(1) ...`` for diagonals ``p >= start``."""
    layers, links = [], []
    for p, J in K.shape.diagonals():
        if start is not None and p < start:
            continue
        states = list(tuples_on(J, 1, N - 1))
        for l in range(1, K.weights[p] + 1):
            if l == 1:

                def weight(s, l=l):
                    t = B.qpow(layer_q_exponent(reading, l, s))
                    for x in s:
                        t = t * head_factor(B, N, x)
                    return t

            else:

                def weight(s, l=l):
                    t = B.qpow(layer_q_exponent(reading, l, s))
                    for x in s:
                        t = t * B.inv_qint(x)
                    return t

            if layers:
                prev = layers[-1].interval
                links.append(strict_link(prev, J) if l == 1 else weak_link(prev, J))
            layers.append(Layer(J, states, weight))
    return layers, links


def flat_region(K: DiagIndex, N: int, start: Optional[int] = None, prefix: str = "n"):
    """
    Variables and constraints of the flat layers as a :class:`Region`
    (diagonals ``p >= start``).  Returns the region and, per layer,
    ``(p, l, J, names)``.
    """
    names: List[str] = []
    cons: List[Tuple[str, str, str]] = []
    meta = []
    prev = None
    for p, J in K.shape.diagonals():
        if start is not None and p < start:
            continue
        for l in range(1, K.weights[p] + 1):
            layer_names = {j: f"{prefix}{p}_{l}_{j}" for j in J}
            names += list(layer_names.values())
            if prev is not None:
                cons += relation_constraints(prev, layer_names, strict=(l == 1))
            meta.append((p, l, J, layer_names))
            prev = layer_names
    return Region(names, {v: (1, N - 1) for v in names}, cons), meta


def schur_bz(K: DiagIndex, N: int, method: str = "dp", backend=FAST) -> RatFunc:
    """
    Schur-type Bradley-Zhao sum over semi-standard fillings of ``K.shape``
    with entries in ``[1, N-1]``.

    ``naive`` walks the tableau stream (row/column conditions); ``dp``
    chains diagonal tuples with the strict interleaving relation.
    """
    _check_method(method)
    B = get_backend(backend)
    if method == "naive":
        cells = K.shape.sorted_cells()
        ks = [K.cell_weight(c) for c in cells]
        terms = (
            (sum((kk - 1) * x for kk, x in zip(ks, filling)), [x for kk, x in zip(ks, filling) for _ in range(kk)])
            for filling in enumerate_ssyt(K.shape, N, "rows")
        )
        return _finish(B, B.q_over_sum(terms))
    layers, links = schur_bz_layers(B, K, N)
    return _finish(B, chain_dp(B, layers, links))


def schur_qflat(K: DiagIndex, N: int, reading=DEFAULT_READING, method: str = "dp", backend=FAST) -> RatFunc:
    """
    Schur-type q-flat sum; ``reading`` fixes the numerator q-powers
    (see :class:`Reading`).
    """
    _check_method(method)
    reading = _reading(reading)
    B = get_backend(backend)
    if method == "naive":
        region, meta = flat_region(K, N)
        slots = []
        pos = {v: i for i, v in enumerate(region.variables)}
        for p, l, J, names in meta:
            slots.append((l, [pos[names[j]] for j in J]))

        def term(point):
            shift, dens = 0, []
            for l, idx in slots:
                vals = [point[i] for i in idx]
                shift += layer_q_exponent(reading, l, vals)
                dens += [N - x for x in vals] if l == 1 else vals
            return shift, dens

        return _finish(B, B.q_over_sum(term(point) for point in region.points()))
    layers, links = schur_flat_layers(B, K, N, reading)
    return _finish(B, chain_dp(B, layers, links))


# ---------------------------------------------------------------------------
# dispatch and the classical (q = 1) values


def evaluate(kind, index, N: int, reading=DEFAULT_READING, method: str = "dp", backend=FAST) -> RatFunc:
    kind = SumKind(kind) if not isinstance(kind, SumKind) else kind
    if kind is SumKind.BZ:
        return zeta_bz(index, N, method, backend)
    if kind is SumKind.QFLAT:
        return zeta_qflat(index, N, method, backend)
    if kind is SumKind.BZ_STAR:
        return zeta_bz_star(index, N, method, backend)
    if kind is SumKind.QSTAR_FLAT:
        return zeta_qstar_flat(index, N, method, backend)
    if kind is SumKind.SCHUR_BZ:
        return schur_bz(index, N, method, backend)
    return schur_qflat(index, N, reading, method, backend)


def classical_oracle(kind, index, N: int) -> Fraction:
    """
    Direct evaluation over Q of the q = 1 sum (weights ``1/m``), by region
    enumeration; shares no code with the q-evaluators beyond the enumerators.
    """
    kind = SumKind(kind) if not isinstance(kind, SumKind) else kind
    total = Fraction(0)
    if kind in (SumKind.BZ, SumKind.BZ_STAR):
        parts = as_parts(index)
        region = _linear_region(len(parts), [kind is SumKind.BZ] * (len(parts) - 1), 1, N - 1)
        for point in region.points():
            t = Fraction(1)
            for kk, m in zip(parts, point):
                t /= m**kk
            total += t
        return total
    if kind in (SumKind.QFLAT, SumKind.QSTAR_FLAT):
        parts = as_parts(index)
        if kind is SumKind.QFLAT:
            first = [t == 0 for kk in parts for t in range(kk)]
            region = _linear_region(len(first), first[1:], 1, N - 1)
            heads = first
        else:
            names, cons, firsts, lasts, heads = [], [], [], [], []
            for j, kk in enumerate(parts):
                block = [f"n{j}_{t}" for t in range(kk)]
                names += block
                heads += [t == 0 for t in range(kk)]
                cons += [(block[t], "<=", block[t + 1]) for t in range(kk - 1)]
                firsts.append(block[0])
                lasts.append(block[-1])
            cons += [(firsts[j - 1], "<=", lasts[j]) for j in range(1, len(parts))]
            region = Region(names, {v: (1, N - 1) for v in names}, cons)
        for point in region.points():
            t = Fraction(1)
            for head, n in zip(heads, point):
                t /= (N - n) if head else n
            total += t
        return total
    if kind is SumKind.SCHUR_BZ:
        cells = index.shape.sorted_cells()
        ks = [index.cell_weight(c) for c in cells]
        for filling in enumerate_ssyt(index.shape, N, "rows"):
            t = Fraction(1)
            for kk, x in zip(ks, filling):
                t /= x**kk
            total += t
        return total
    region, meta = flat_region(index, N)
    pos = {v: i for i, v in enumerate(region.variables)}
    for point in region.points():
        t = Fraction(1)
        for p, l, J, names in meta:
            for j in J:
                x = point[pos[names[j]]]
                t /= (N - x) if l == 1 else x
        total += t
    return total


def classical_value(kind, index, N: int, reading=DEFAULT_READING, method: str = "dp") -> Fraction:
    """
    The q = 1 value of a sum, via specialisation of the exact q-sum; raises
    ``AssertionError`` if the direct rational oracle disagrees.
    """
    value = specialize_q1(evaluate(kind, index, N, reading, method))
    oracle = classical_oracle(kind, index, N)
    if value != oracle:
        raise AssertionError(f"q=1 specialisation {value} differs from direct value {oracle}")
    return value


def as_index(kind: SumKind, index):
    """Normalise ``index`` to the argument type ``kind`` expects."""
    if kind.is_schur:
        if not isinstance(index, DiagIndex):
            raise TypeError(f"{kind.value} needs a DiagIndex")
        return index
    if isinstance(index, DiagIndex):
        raise TypeError(f"{kind.value} needs a linear index")
    return LinearIndex(tuple(index))
