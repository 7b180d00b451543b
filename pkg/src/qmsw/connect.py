"""
Connectors, determinant connectors, connected sums and the transport checks.

Two connector normalisations coexist and are never mixed in one computation:

* ``SEC2``: ``C(m, n) = binom(n, m)_q / binom(N, m)_q`` for the linear
  connected sums ``Z_N(k | l)`` (whose endpoints have upper bound ``N+1``);
* ``SEC3``: ``C(m, n) = binom(n, m)_q / binom(N-1, m)_q`` for the Schur
  connected sums ``Z(k; a)`` (upper bound ``N``), with ``C(m, N-1) = 1`` and
  ``C(m, n) = 0`` for ``m > n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from .combinat import (
    DiagIndex,
    Interval,
    Region,
    TupleOnInterval,
    _strict,
    _weak,
    as_parts,
    is_consecutive,
    tuples_on,
)
from .exactq import RatFunc
from .exactq.backends import FAST, REFERENCE, Backend, get_backend
from .exactq.local import CycloFraction, ipoly_add, ipoly_mul, q_binomial_exps
from .exactq.qnumbers import q_binomial
from .sums import (
    DEFAULT_READING,
    Layer,
    Reading,
    _reading,
    bz_factor,
    chain_dp,
    head_factor,
    region_sum,
    relation_constraints,
    schur_bz,
    schur_bz_layers,
    schur_flat_layers,
    schur_qflat,
    flat_region,
    layer_q_exponent,
    tail_factor,
    zeta_bz,
    zeta_qflat,
)


class ConnectorKind(Enum):
    SEC2 = "sec2"
    SEC3 = "sec3"


class RegionVariant(Enum):
    """
    Summation region of the linear connected sum ``Z_N(k | l)``.

    ``PRINTED``            weak first step in block 1, strict first step in
                           later blocks, weak steps between blocks, all
                           variables below ``N``;
    ``ALL_BLOCKS_STRICT``  as ``PRINTED`` with a strict first step in block 1;
    ``SHIFTED``            the flat region with upper bound ``N+1`` rewritten
                           in the variables ``n_j1 - 1``: strict first step in
                           every block, strict step out of a one-element
                           block and weak otherwise, non-first coordinates up
                           to ``N``.
    """

    PRINTED = "printed"
    ALL_BLOCKS_STRICT = "strict"
    SHIFTED = "shifted"


# ---------------------------------------------------------------------------
# connectors


def _top(kind: ConnectorKind, N: int) -> int:
    return N if kind is ConnectorKind.SEC2 else N - 1


def connector_element(B: Backend, kind: ConnectorKind, m: int, n: int, N: int):
    top = _top(kind, N)
    if not (0 <= m <= top and 0 <= n <= top):
        raise ValueError(f"connector arguments ({m}, {n}) outside [0, {top}]")
    if m > n:
        return B.zero
    if kind is ConnectorKind.SEC3 and n == top:
        return B.one
    return B.connector(m, n, top)


def connector(kind, m: int, n: int, N: int, backend=FAST) -> RatFunc:
    """
    >>> connector(ConnectorKind.SEC2, 1, 2, 3)
    RatFunc('(q + 1)/(q^2 + q + 1)')
    """
    kind = ConnectorKind(kind) if not isinstance(kind, ConnectorKind) else kind
    B = get_backend(backend)
    return B.to_ratfunc(connector_element(B, kind, m, n, N))


# ---------------------------------------------------------------------------
# connector identities


def sec2_identity_sides(m: int, n: int, N: int, backend=FAST) -> Tuple[Optional[Tuple[RatFunc, RatFunc]], Optional[Tuple[RatFunc, RatFunc]]]:
    """Both sides of the two SEC2 connector identities, or ``None`` when not applicable."""
    if not 0 <= m <= n <= N:
        raise ValueError(f"need 0 <= m <= n <= N, got ({m}, {n}, {N})")
    B = get_backend(backend)
    C = lambda a, b: connector_element(B, ConnectorKind.SEC2, a, b, N)
    first = second = None
    if m > 0:
        lhs = B.qpow(m) * B.inv_qint(m) * C(m, n)
        rhs = B.zero
        for b in range(m, n + 1):
            rhs = rhs + C(m, b) * B.qpow(b) * B.inv_qint(b)
        first = (B.to_ratfunc(lhs), B.to_ratfunc(rhs))
    if m < n:
        lhs = B.zero
        for a in range(m + 1, n + 1):
            lhs = lhs + B.inv_qint(a) * C(a, n)
        rhs = B.zero
        for b in range(m, n):
            rhs = rhs + C(m, b) * B.inv_qint(N - b)
        second = (B.to_ratfunc(lhs), B.to_ratfunc(rhs))
    return first, second


def sec2_identity_check(m: int, n: int, N: int, backend=FAST) -> Tuple[Optional[bool], Optional[bool]]:
    return tuple(None if s is None else s[0] == s[1] for s in sec2_identity_sides(m, n, N, backend))


def sec3_first_sides(m: int, n: int, n2: int, N: int, backend=FAST) -> Tuple[RatFunc, RatFunc]:
    """``q^m/[m] (C(m,n') - C(m,n)) = sum_{b=n+1}^{n'} C(m,b) q^b/[b]`` (SEC3)."""
    if not (0 < m < N and 0 <= n <= n2 < N):
        raise ValueError(f"need 0 < m < N and 0 <= n <= n' < N, got ({m}, {n}, {n2}, {N})")
    B = get_backend(backend)
    C = lambda a, b: connector_element(B, ConnectorKind.SEC3, a, b, N)
    lhs = B.qpow(m) * B.inv_qint(m) * (C(m, n2) - C(m, n))
    rhs = B.zero
    for b in range(n + 1, n2 + 1):
        rhs = rhs + C(m, b) * B.qpow(b) * B.inv_qint(b)
    return B.to_ratfunc(lhs), B.to_ratfunc(rhs)


def sec3_second_sides(m: int, m2: int, n: int, N: int, backend=FAST) -> Tuple[RatFunc, RatFunc]:
    """``sum_{a=m+1}^{m'} C(a,n) q^(n-a)/[n] = (C(m,n-1) - C(m',n-1)) / [N-n]`` (SEC3)."""
    if not (0 <= m <= m2 < N and 0 < n < N):
        raise ValueError(f"need 0 <= m <= m' < N and 0 < n < N, got ({m}, {m2}, {n}, {N})")
    B = get_backend(backend)
    C = lambda a, b: connector_element(B, ConnectorKind.SEC3, a, b, N)
    lhs = B.zero
    for a in range(m + 1, m2 + 1):
        lhs = lhs + C(a, n) * B.qpow(n - a) * B.inv_qint(n)
    rhs = (C(m, n - 1) - C(m2, n - 1)) * B.inv_qint(N - n)
    return B.to_ratfunc(lhs), B.to_ratfunc(rhs)


def sec3_identity_check(m: int, n: int, other: int, N: int, backend=FAST) -> Tuple[Optional[bool], Optional[bool]]:
    """
    Verdicts for both SEC3 identities: the first reads ``other`` as ``n'``
    (arguments ``m, n, n'``), the second as ``m'`` (arguments ``m, m', n``).
    ``None`` marks an identity whose hypotheses fail.
    """
    first = second = None
    if 0 < m < N and 0 <= n <= other < N:
        lhs, rhs = sec3_first_sides(m, n, other, N, backend)
        first = lhs == rhs
    if 0 <= m <= other < N and 0 < n < N:
        lhs, rhs = sec3_second_sides(m, other, n, N, backend)
        second = lhs == rhs
    return first, second


# ---------------------------------------------------------------------------
# determinant connectors


def _padded(m: TupleOnInterval, n: TupleOnInterval, N: int):
    if not is_consecutive(m.interval, n.interval):
        raise ValueError(f"intervals ({m.interval}, {n.interval}) are not consecutive")
    lo = min(m.interval.lo, n.interval.lo) if not n.interval.is_empty() else m.interval.lo
    hi = max(m.interval.hi, n.interval.hi)
    js = range(lo, hi + 1)
    return [m.get(j, 0) for j in js], [n.get(j, N - 1) for j in js]


def _int_det(rows: List[List[tuple]]) -> tuple:
    """Laplace expansion along the first row; entries are integer polynomials."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return ipoly_add(ipoly_mul(rows[0][0], rows[1][1]), tuple(-c for c in ipoly_mul(rows[0][1], rows[1][0])))
    acc: tuple = ()
    for col in range(size):
        entry = rows[0][col]
        if not entry:
            continue
        minor = [r[:col] + r[col + 1 :] for r in rows[1:]]
        term = ipoly_mul(entry, _int_det(minor))
        if col % 2:
            term = tuple(-c for c in term)
        acc = ipoly_add(acc, term)
    return acc


@lru_cache(maxsize=None)
def _det_fast(mt: Tuple[int, ...], nt: Tuple[int, ...], N: int, kind: ConnectorKind) -> CycloFraction:
    top = _top(kind, N)
    # every entry of row j1 has denominator binom(top, m_j1), so factor it out
    rows = [[tuple(int(c) for c in q_binomial(b, a).coeffs) for b in nt] for a in mt]
    det = _int_det(rows)
    if not det:
        return CycloFraction()
    exps: tuple = ()
    for a in mt:
        e = q_binomial_exps(top, a)
        if len(e) > len(exps):
            exps = exps + (0,) * (len(e) - len(exps))
        exps = tuple(x + (e[i] if i < len(e) else 0) for i, x in enumerate(exps))
    return CycloFraction(det, exps)


def _laplace(B: Backend, mat):
    size = len(mat)
    if size == 1:
        return mat[0][0]
    acc = B.zero
    for col in range(size):
        entry = mat[0][col]
        if entry.is_zero():
            continue
        minor = [r[:col] + r[col + 1 :] for r in mat[1:]]
        term = entry * _laplace(B, minor)
        acc = acc - term if col % 2 else acc + term
    return acc


def det_connector_element(B: Backend, m: TupleOnInterval, n: TupleOnInterval, N: int, kind=ConnectorKind.SEC3):
    if m.interval.is_empty() and n.interval.is_empty():
        return B.one  # determinant of the empty matrix
    mt, nt = _padded(m, n, N)
    top = _top(kind, N)
    if any(not 0 <= x <= top for x in mt + nt):
        raise ValueError(f"determinant connector arguments outside [0, {top}]")
    if B is FAST:
        return _det_fast(tuple(mt), tuple(nt), N, kind)
    mat = [[connector_element(B, kind, a, b, N) for b in nt] for a in mt]
    return _laplace(B, mat)


def det_connector(m: TupleOnInterval, n: TupleOnInterval, N: int, kind=ConnectorKind.SEC3, backend=FAST) -> RatFunc:
    """
    ``det(C(m~_j1, n~_j2))`` over ``J ∪ J'`` with ``m~ = 0`` off ``J`` and
    ``n~ = N-1`` off ``J'``.
    """
    kind = ConnectorKind(kind) if not isinstance(kind, ConnectorKind) else kind
    B = get_backend(backend)
    return B.to_ratfunc(det_connector_element(B, m, n, N, kind))


def det_connector_permutations(m: TupleOnInterval, n: TupleOnInterval, N: int, kind=ConnectorKind.SEC3) -> RatFunc:
    """Leibniz-formula determinant over canonical rational functions (test oracle)."""
    kind = ConnectorKind(kind) if not isinstance(kind, ConnectorKind) else kind
    mt, nt = _padded(m, n, N)
    B = REFERENCE
    mat = [[connector_element(B, kind, a, b, N) for b in nt] for a in mt]
    size = len(mat)
    total = B.zero
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        t = B.one
        for i, j in enumerate(perm):
            t = t * mat[i][j]
        total = total - t if inversions % 2 else total + t
    return total


# ---------------------------------------------------------------------------
# interleaving identities for determinant connectors


def _q_over(B: Backend, values, shift_values=None):
    """``prod_j q^(v_j - s_j) / [v_j]``."""
    t = B.one
    for i, v in enumerate(values):
        s = shift_values[i] if shift_values is not None else 0
        t = t * B.qpow(v - s) * B.inv_qint(v)
    return t


def det_first_sides(m: TupleOnInterval, n: TupleOnInterval, N: int, backend=FAST) -> Tuple[RatFunc, RatFunc]:
    """
    ``prod(q^m/[m]) D(m, n) = sum_{b in [1,N-1]^J, b ⊴ n} D(m, b) prod(q^b/[b])``.
    """
    _check_det_args(m, n, N, (1, 0))
    if m.interval.is_empty():
        raise ValueError("the first identity needs a non-empty J")
    B = get_backend(backend)
    lhs = _q_over(B, m.values) * det_connector_element(B, m, n, N)
    J = m.interval
    rhs = B.zero
    for b in tuples_on(J, 1, N - 1):
        if not _weak(J.lo, b, n.interval.lo, n.values):
            continue
        bt = TupleOnInterval(J, b)
        rhs = rhs + det_connector_element(B, m, bt, N) * _q_over(B, b)
    return B.to_ratfunc(lhs), B.to_ratfunc(rhs)


def det_second_sides(m: TupleOnInterval, n: TupleOnInterval, N: int, backend=FAST) -> Tuple[RatFunc, RatFunc]:
    """
    ``sum_{a in [1,N-1]^J', m ◁ a} D(a, n) prod(q^(n-a)/[n]) = D(m, n-1) / prod([N-n])``.
    """
    _check_det_args(m, n, N, (0, 1))
    B = get_backend(backend)
    Jp = n.interval
    lhs = B.zero
    for a in tuples_on(Jp, 1, N - 1):
        if not _strict(m.interval.lo, m.values, Jp.lo, a):
            continue
        at = TupleOnInterval(Jp, a)
        lhs = lhs + det_connector_element(B, at, n, N) * _q_over(B, n.values, a)
    rhs = det_connector_element(B, m, n.shifted(-1), N)
    for x in n.values:
        rhs = rhs * B.inv_qint(N - x)
    return B.to_ratfunc(lhs), B.to_ratfunc(rhs)


def _check_det_args(m: TupleOnInterval, n: TupleOnInterval, N: int, lows: Tuple[int, int]) -> None:
    if N < 2:
        raise ValueError("N must be at least 2")
    if not is_consecutive(m.interval, n.interval):
        raise ValueError(f"intervals ({m.interval}, {n.interval}) are not consecutive")
    if not (m.is_nondecreasing() and n.is_nondecreasing()):
        raise ValueError("tuples must be non-decreasing")
    mlo, nlo = lows
    if any(not mlo <= x <= N - 1 for x in m.values) or any(not nlo <= x <= N - 1 for x in n.values):
        raise ValueError(f"tuple entries outside the ranges [{mlo}, N-1] / [{nlo}, N-1]")


def det_identity_check(m: TupleOnInterval, n: TupleOnInterval, N: int, backend=FAST) -> Tuple[Optional[bool], Optional[bool]]:
    """
    Verdicts for both determinant identities; an identity whose range
    hypotheses fail gives ``None``.  Non-consecutive or non-monotone input
    raises ``ValueError``.
    """
    if not is_consecutive(m.interval, n.interval):
        raise ValueError(f"intervals ({m.interval}, {n.interval}) are not consecutive")
    if not (m.is_nondecreasing() and n.is_nondecreasing()):
        raise ValueError("tuples must be non-decreasing")
    first = second = None
    if all(1 <= x <= N - 1 for x in m.values) and all(0 <= x <= N - 1 for x in n.values):
        lhs, rhs = det_first_sides(m, n, N, backend)
        first = lhs == rhs
    if all(0 <= x <= N - 1 for x in m.values) and all(1 <= x <= N - 1 for x in n.values):
        lhs, rhs = det_second_sides(m, n, N, backend)
        second = lhs == rhs
    return first, second


# ---------------------------------------------------------------------------
# linear connected sums


@dataclass(frozen=True)
class LinearConnectedSpec:
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    upper: int
    variant: RegionVariant = RegionVariant.SHIFTED

    def label(self) -> str:
        return f"Z_{self.upper}({','.join(map(str, self.left))} | {','.join(map(str, self.right))})"


def _linear_connected_layout(k, l, N: int, variant: RegionVariant):
    """
    Variables (in chain order), their ranges, the relation to the next
    variable, and each variable's role.
    """
    names, bounds, roles = [], {}, []
    cons = []
    for i, kk in enumerate(k):
        v = f"m{i}"
        names.append(v)
        bounds[v] = (1, N)
        roles.append(("m", kk))
    for i in range(len(k) - 1):
        cons.append((f"m{i}", "<", f"m{i + 1}"))
    first_hi = N - 1
    tail_hi = N if variant is RegionVariant.SHIFTED else N - 1
    first_lo = 0 if variant is RegionVariant.SHIFTED else 1
    prev_last = None
    prev_len = None
    for j, lj in enumerate(l):
        block = [f"n{j}_{t}" for t in range(lj)]
        for t, v in enumerate(block):
            names.append(v)
            bounds[v] = (first_lo, first_hi) if t == 0 else (1, tail_hi)
            roles.append(("head",) if t == 0 else ("tail",))
        for t in range(lj - 1):
            strict_first = variant is not RegionVariant.PRINTED or j > 0
            op = "<" if (t == 0 and strict_first) else "<="
            cons.append((block[t], op, block[t + 1]))
        if prev_last is not None:
            op = "<" if (variant is RegionVariant.SHIFTED and prev_len == 1) else "<="
            cons.append((prev_last, op, block[0]))
        prev_last, prev_len = block[-1], lj
    if k and l:
        cons.append((f"m{len(k) - 1}", "<=", "n0_0"))
    return names, bounds, cons, roles


def connected_sum_linear(k, l, N: int, variant=RegionVariant.SHIFTED, method: str = "dp", backend=FAST) -> RatFunc:
    """
    ``Z_N(k | l)``: harmonic q-sum on the left, flat blocks on the right, joined
    by the SEC2 connector ``C(m_r, n_11)``.  An empty side gives the boundary
    values ``zeta_bz(k, N+1)`` and ``zeta_qflat(l, N+1)``.
    """
    variant = RegionVariant(variant) if not isinstance(variant, RegionVariant) else variant
    k, l = as_parts(k), as_parts(l)
    if not l:
        return zeta_bz(k, N + 1, method, backend)
    if not k:
        return zeta_qflat(l, N + 1, method, backend)
    B = get_backend(backend)
    names, bounds, cons, roles = _linear_connected_layout(k, l, N, variant)

    def factor(role, x):
        if role[0] == "m":
            return bz_factor(B, role[1], x)
        if role[0] == "head":
            return head_factor(B, N, x)
        return tail_factor(B, x)

    join = len(k) - 1  # variable m_r; the connector sits between it and n_11
    if method == "naive":

        def term(point):
            t = B.one
            for role, x in zip(roles, point):
                t = t * factor(role, x)
            return t * connector_element(B, ConnectorKind.SEC2, point[join], point[join + 1], N)

        return B.to_ratfunc(region_sum(B, Region(names, bounds, cons), term))
    if method != "dp":
        raise ValueError(f"unknown evaluator {method!r}")
    single = Interval(0, 0)
    layers = []
    for v, role in zip(names, roles):
        lo, hi = bounds[v]
        layers.append(Layer(single, [(x,) for x in range(lo, hi + 1)], lambda s, role=role: factor(role, s[0])))
    rel = {(a, b): op for a, op, b in cons}
    links = []
    for i in range(len(names) - 1):
        op = rel[(names[i], names[i + 1])]
        if i == join:
            links.append(
                lambda s, t: connector_element(B, ConnectorKind.SEC2, s[0], t[0], N) if s[0] <= t[0] else None
            )
        elif op == "<":
            links.append(lambda s, t: True if s[0] < t[0] else None)
        else:
            links.append(lambda s, t: True if s[0] <= t[0] else None)
    return B.to_ratfunc(chain_dp(B, layers, links))


@dataclass
class TransportStep:
    step: str
    lhs: RatFunc
    rhs: RatFunc

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def transport_chain_linear(k, N: int, variant=RegionVariant.SHIFTED, method: str = "dp", backend=FAST) -> List[Tuple[str, RatFunc]]:
    """``Z_N(k|), Z_N(k_1..k_{r-1} | k_r), ..., Z_N(|k)`` as labelled values."""
    k = as_parts(k)
    out = []
    for cut in range(len(k), -1, -1):
        spec = LinearConnectedSpec(k[:cut], k[cut:], N, RegionVariant(variant))
        out.append((spec.label(), connected_sum_linear(spec.left, spec.right, N, spec.variant, method, backend)))
    return out


def transport_check_linear(k, N: int, variant=RegionVariant.SHIFTED, method: str = "dp", backend=FAST) -> List[TransportStep]:
    """
    Every transport step of the chain from ``zeta_bz(k, N+1)`` to
    ``zeta_qflat(k, N+1)``.
    """
    if not as_parts(k):
        raise ValueError("transport chain needs a non-empty index")
    chain = transport_chain_linear(k, N, variant, method, backend)
    return [TransportStep(f"{a} = {b}", x, y) for (a, x), (b, y) in zip(chain, chain[1:])]


# ---------------------------------------------------------------------------
# Schur connected sums


def connected_sum_schur(K: DiagIndex, a: int, N: int, reading=DEFAULT_READING, method: str = "dp", backend=FAST) -> RatFunc:
    """
    ``Z(K; a)``: Bradley-Zhao tuples on diagonals ``p0..a``, flat layers on
    ``a+1..p1``, joined by ``D(m_a, n_(a+1)^(1) - 1)``.  ``a = p1`` and
    ``a = p0 - 1`` are the two boundary sums.
    """
    reading = _reading(reading)
    if not K.shape.cells:
        return RatFunc(1)
    p0, p1 = K.shape.p0, K.shape.p1
    if not p0 - 1 <= a <= p1:
        raise ValueError(f"a must lie in [{p0 - 1}, {p1}], got {a}")
    if a == p1:
        return schur_bz(K, N, method, backend)
    if a == p0 - 1:
        return schur_qflat(K, N, reading, method, backend)
    B = get_backend(backend)
    Ja, Jn = K.shape.interval(a), K.shape.interval(a + 1)

    def join(s, t):
        return det_connector_element(B, TupleOnInterval(Ja, s), TupleOnInterval(Jn, tuple(x - 1 for x in t)), N)

    if method == "dp":
        left, left_links = schur_bz_layers(B, K, N, upto=a)
        right, right_links = schur_flat_layers(B, K, N, reading, start=a + 1)
        return B.to_ratfunc(chain_dp(B, left + right, left_links + [join] + right_links))
    if method != "naive":
        raise ValueError(f"unknown evaluator {method!r}")
    # left side: m_p tuples chained by ◁
    names, cons, left_meta = [], [], []
    prev = None
    for p, J in K.shape.diagonals():
        if p > a:
            break
        layer = {j: f"m{p}_{j}" for j in J}
        names += list(layer.values())
        if prev is not None:
            cons += relation_constraints(prev, layer, strict=True)
        left_meta.append((K.weights[p], J, layer))
        prev = layer
    right_region, right_meta = flat_region(K, N, start=a + 1)
    region = Region(
        names + right_region.variables,
        {**{v: (1, N - 1) for v in names}, **right_region.bounds},
        cons + right_region.constraints,
    )
    pos = {v: i for i, v in enumerate(region.variables)}
    last_left = left_meta[-1][2]
    first_right = right_meta[0][3]

    # summands sharing the joining pair (m_a, n_(a+1)^(1)) share the
    # determinant factor, so collect the rest of each summand per pair
    groups: dict = {}
    for point in region.points():
        shift, dens = 0, []
        for kp, J, layer in left_meta:
            for j in J:
                x = point[pos[layer[j]]]
                shift += (kp - 1) * x
                dens += [x] * kp
        for p, l, J, layer in right_meta:
            vals = [point[pos[layer[j]]] for j in J]
            shift += layer_q_exponent(reading, l, vals)
            dens += [N - x for x in vals] if l == 1 else vals
        s = tuple(point[pos[last_left[j]]] for j in Ja)
        u = tuple(point[pos[first_right[j]]] for j in Jn)
        groups.setdefault((s, u), []).append((shift, dens))
    acc = B.zero
    for (s, u), terms in groups.items():
        acc = acc + B.q_over_sum(terms) * join(s, u)
    return B.to_ratfunc(acc)


def transport_chain_schur(K: DiagIndex, N: int, reading=DEFAULT_READING, method: str = "dp", backend=FAST) -> List[Tuple[int, RatFunc]]:
    """``Z(K; a)`` for ``a = p1, p1-1, ..., p0-1``."""
    if not K.shape.cells:
        return [(0, RatFunc(1))]
    return [
        (a, connected_sum_schur(K, a, N, reading, method, backend))
        for a in range(K.shape.p1, K.shape.p0 - 2, -1)
    ]


def transport_check_schur(K: DiagIndex, N: int, reading=DEFAULT_READING, method: str = "dp", backend=FAST) -> List[Tuple[int, RatFunc, bool]]:
    """
    ``(a, Z(K; a), Z(K; a) == Z(K; a+1))`` down the chain; the first entry
    compares with itself and is always ``True``.
    """
    chain = transport_chain_schur(K, N, reading, method, backend)
    out = []
    prev = None
    for a, value in chain:
        out.append((a, value, prev is None or value == prev))
        prev = value
    return out


def resolve_variant(indices: Sequence, uppers: Sequence[int], variants: Sequence[RegionVariant] = tuple(RegionVariant)):
    """
    Run the linear transport chain for every index and upper bound under each
    variant; return ``{variant: number of failing steps}``.
    """
    tally = {}
    for variant in variants:
        bad = 0
        for k in indices:
            for N in uppers:
                bad += sum(not s.equal for s in transport_check_linear(k, N, variant))
        tally[variant] = bad
    return tally


def resolve_reading(indices: Sequence[DiagIndex], uppers: Sequence[int], readings: Sequence[Reading] = tuple(Reading)):
    """
    For each reading, count instances where the Schur transport chain is not
    constant or its endpoints disagree.
    """
    tally = {}
    for reading in readings:
        bad = 0
        for K in indices:
            for N in uppers:
                chain = transport_check_schur(K, N, reading)
                if not all(eq for _, _, eq in chain):
                    bad += 1
        tally[reading] = bad
    return tally
