from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmsw.combinat import DiagIndex, Interval, SkewShape, TupleOnInterval, diag_indices, skew_shapes
from qmsw.connect import (
    ConnectorKind,
    RegionVariant,
    connected_sum_linear,
    connected_sum_schur,
    connector,
    det_connector,
    det_connector_permutations,
    sec2_identity_check,
    sec3_identity_check,
    sec3_first_sides,
    sec3_second_sides,
    det_identity_check,
    det_first_sides,
    resolve_reading,
    resolve_variant,
    transport_chain_linear,
    transport_check_linear,
    transport_check_schur,
)
from qmsw.exactq import QPoly, RatFunc, q_integer
from qmsw.exactq.backends import REFERENCE
from qmsw.sums import Reading, schur_bz, schur_qflat, zeta_bz, zeta_bz_star, zeta_qflat, zeta_qstar_flat

from oracles import qint, same_at_points, sec3

Q = RatFunc(QPoly([0, 1]))
TWO = RatFunc(q_integer(2))
ZERO = RatFunc(0)
CORNER = DiagIndex.constant(SkewShape([(1, 2), (2, 1), (2, 2)]), 1)
SQUARE = DiagIndex.constant(SkewShape.skew((2, 2)), 1)


def T(lo, *values):
    if not values:
        return TupleOnInterval(Interval.empty(), ())
    return TupleOnInterval(Interval(lo, lo + len(values) - 1), values)


# -- connectors ----------------------------------------------------------------


def test_connector_values():
    for n in range(4):
        assert connector(ConnectorKind.SEC2, 0, n, 3) == RatFunc(1)
    assert connector(ConnectorKind.SEC2, 1, 2, 3) == RatFunc(QPoly([1, 1]), QPoly([1, 1, 1]))
    for N in range(3, 7):
        assert connector(ConnectorKind.SEC3, 2, 1, N) == ZERO
        assert connector(ConnectorKind.SEC3, 1, N - 1, N) == RatFunc(1)


def test_connector_range_is_checked():
    with pytest.raises(ValueError):
        connector(ConnectorKind.SEC3, 0, 3, 3)


@pytest.mark.parametrize("N", range(2, 8))
def test_connectors_match_gaussian_ratios(N):
    for m, n in product(range(N), repeat=2):
        assert same_at_points(connector(ConnectorKind.SEC3, m, n, N), lambda x: sec3(m, n, N, x))


def test_two_step_connector_identity_examples():
    assert sec2_identity_check(1, 1, 2)[0] is True
    assert sec2_identity_check(1, 3, 4)[0] is True
    assert sec2_identity_check(0, 2, 3) == (None, True)


@pytest.mark.parametrize("N", range(1, 9))
def test_two_step_connector_identities(N):
    for m in range(N + 1):
        for n in range(m, N + 1):
            assert all(v in (None, True) for v in sec2_identity_check(m, n, N))


def test_sec3_connector_identity_examples():
    lhs, rhs = sec3_first_sides(1, 2, 2, 4)
    assert lhs == rhs == ZERO
    assert sec3_identity_check(1, 0, 2, 4)[0] is True
    lhs, rhs = sec3_second_sides(2, 2, 1, 4)
    assert lhs == rhs == ZERO


@pytest.mark.parametrize("N", range(2, 8))
def test_sec3_connector_identities(N):
    for m, n, other in product(range(N), repeat=3):
        assert all(v in (None, True) for v in sec3_identity_check(m, n, other, N))


# -- determinant connectors ---------------------------------------------------


def test_singleton_determinants_are_connectors():
    for N in (3, 4, 5):
        for m, n in product(range(N), repeat=2):
            assert det_connector(T(1, m), T(1, n), N) == connector(ConnectorKind.SEC3, m, n, N)


def test_adjacent_diagonal_determinant():
    # J = {2}, J' = {1}: pads to [[C(0, n), 1], [C(m, n), 1]]
    for N in (3, 4, 5):
        for m, n in product(range(N), repeat=2):
            expected = RatFunc(1) - connector(ConnectorKind.SEC3, m, n, N)
            assert det_connector(T(2, m), T(1, n), N) == expected


def test_zero_row_kills_the_determinant():
    assert det_connector(T(1, 3, 3), T(1, 1, 2), 4) == ZERO


def test_empty_determinant_is_one():
    assert det_connector(T(1), T(1), 4) == RatFunc(1)


def test_non_consecutive_intervals_are_rejected():
    with pytest.raises(ValueError):
        det_connector(T(1, 1), T(3, 1), 4)


pairs = [
    (Interval(1, 2), Interval(1, 2)),
    (Interval(1, 2), Interval(1, 1)),
    (Interval(1, 2), Interval(0, 2)),
    (Interval(1, 2), Interval(0, 1)),
    (Interval(1, 3), Interval(0, 2)),
]


@given(st.sampled_from(pairs), st.integers(2, 5), st.data())
@settings(max_examples=150)
def test_determinant_evaluators_agree(pair, N, data):
    J, Jp = pair
    vals = st.integers(0, N - 1)
    m = TupleOnInterval(J, data.draw(st.lists(vals, min_size=len(J), max_size=len(J))))
    n = TupleOnInterval(Jp, data.draw(st.lists(vals, min_size=len(Jp), max_size=len(Jp))))
    fast = det_connector(m, n, N)
    assert fast == det_connector(m, n, N, backend=REFERENCE)
    assert fast == REFERENCE.to_ratfunc(det_connector_permutations(m, n, N))


def test_determinant_identities_examples():
    assert det_identity_check(T(1, 1), T(1, 2), 4) == sec3_identity_check(1, 2, 2, 4)[:1] + (True,)
    for m in [(1, 1), (1, 2), (2, 3)]:
        for n in [(1, 1), (1, 3), (2, 2), (0, 3)]:
            assert all(v in (None, True) for v in det_identity_check(T(1, *m), T(1, *n), 4))
    lhs, rhs = det_first_sides(T(1, 2, 3), T(1, 1, 2), 4)
    assert lhs == rhs == ZERO


def test_determinant_identities_need_monotone_tuples():
    with pytest.raises(ValueError):
        det_identity_check(T(1, 2, 1), T(1, 2, 2), 4)


# -- linear connected sums -----------------------------------------------------


def test_linear_boundaries():
    value = RatFunc(QPoly([2, 1]), QPoly([1, 1]))
    assert connected_sum_linear((1,), (), 2) == value == zeta_bz((1,), 3)
    assert connected_sum_linear((), (1,), 2) == value == zeta_qflat((1,), 3)


def test_single_step_of_the_linear_chain():
    assert connected_sum_linear((1,), (1,), 3) == connected_sum_linear((), (1, 1), 3)


def test_linear_transport_examples():
    steps = transport_check_linear((1,), 2)
    assert len(steps) == 1 and steps[0].equal
    steps = transport_check_linear((1, 2), 4)
    assert len(steps) == 2 and all(s.equal for s in steps)


def test_upper_bound_one_chain_is_constant_at_q():
    # Z_1 ends at zeta_bz((2), 2) = q, which is not zero
    chain = transport_chain_linear((2,), 1)
    assert [v for _, v in chain] == [Q, Q]


def test_only_the_shifted_region_transports():
    tally = resolve_variant([(1,), (2,), (1, 1), (1, 2), (2, 1)], [1, 2, 3, 4])
    assert tally[RegionVariant.SHIFTED] == 0
    assert tally[RegionVariant.PRINTED] > 0
    assert tally[RegionVariant.ALL_BLOCKS_STRICT] > 0
    assert not all(s.equal for s in transport_check_linear((1, 2), 2, RegionVariant.PRINTED))


linear_pair = st.tuples(
    st.lists(st.integers(1, 2), max_size=2).map(tuple),
    st.lists(st.integers(1, 2), max_size=2).map(tuple),
    st.integers(1, 5),
    st.sampled_from(list(RegionVariant)),
)


@given(linear_pair)
@settings(max_examples=80)
def test_linear_connected_sum_dp_equals_naive(args):
    k, l, N, variant = args
    assert connected_sum_linear(k, l, N, variant, "dp") == connected_sum_linear(k, l, N, variant, "naive")


# -- Schur connected sums -----------------------------------------------------


def test_schur_boundaries():
    for K in (DiagIndex.column((1, 2)), DiagIndex.row((1, 2)), CORNER):
        for N in (2, 3, 4):
            assert connected_sum_schur(K, K.shape.p1, N) == schur_bz(K, N)
            assert connected_sum_schur(K, K.shape.p0 - 1, N) == schur_qflat(K, N)
    single = DiagIndex.constant(SkewShape([(1, 1)]), 1)
    assert connected_sum_schur(single, -1, 3) == RatFunc(1) / TWO + RatFunc(1)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_column_12_intermediate(N):
    K = DiagIndex.column((1, 2))

    def display(x):
        total = x * 0
        for m, n1, n2 in product(range(1, N), repeat=3):
            if n1 <= n2:
                total += sec3(m, n1 - 1, N, x) * x**n2 / (qint(m, x) * qint(N - n1, x) * qint(n2, x))
        return total

    def half_step(x):
        total = x * 0
        for m0, m1, n in product(range(1, N), repeat=3):
            if m0 < m1:
                total += sec3(m1, n, N, x) * x**n / (qint(m0, x) * qint(m1, x) * qint(n, x))
        return total

    assert same_at_points(connected_sum_schur(K, 0, N), display)
    assert same_at_points(zeta_bz((1, 2), N), half_step)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_row_12_intermediate(N):
    K = DiagIndex.row((1, 2))

    def display(x):
        total = x * 0
        for m, n in product(range(1, N), repeat=2):
            total += x**m / qint(m, x) ** 2 * (1 - sec3(m, n - 1, N, x)) / qint(N - n, x)
        return total

    def flat_end(x):
        total = x * 0
        for n1, n2, n3 in product(range(1, N), repeat=3):
            if n1 <= n2 >= n3:
                total += x**n2 / (qint(N - n1, x) * qint(n2, x) * qint(N - n3, x))
        return total

    assert same_at_points(connected_sum_schur(K, -1, N), display)
    assert connected_sum_schur(K, 0, N) == zeta_bz_star((1, 2), N)
    assert same_at_points(zeta_qstar_flat((1, 2), N), flat_end)
    assert same_at_points(schur_qflat(K, N), flat_end)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_corner_shape_intermediate(N):
    def display(x):
        total = x * 0
        for m, mp, n in product(range(1, N), repeat=3):
            if m < mp:
                total += (1 - sec3(mp, n - 1, N, x)) / (qint(m, x) * qint(mp, x) * qint(N - n, x))
        return total

    def half_step(x):
        total = x * 0
        for m, mp, m11, n in product(range(1, N), repeat=4):
            if m < mp and m11 <= mp:
                total += sec3(m11, n, N, x) * x ** (n - m11) / (qint(m, x) * qint(mp, x) * qint(n, x))
        return total

    assert same_at_points(connected_sum_schur(CORNER, 0, N), display)
    assert same_at_points(schur_bz(CORNER, N), half_step)


def test_schur_transport_examples():
    for K, value in [
        (DiagIndex.column((1, 2)), zeta_bz((1, 2), 3)),
        (DiagIndex.row((1, 2)), Q + Q**2 / TWO**2 + Q**2 / TWO**3),
        (CORNER, schur_bz(CORNER, 3)),
    ]:
        chain = transport_check_schur(K, 3)
        assert all(eq for _, _, eq in chain)
        assert all(v == value for _, v, _ in chain)


def test_reading_resolution():
    assert not all(eq for _, _, eq in transport_check_schur(SQUARE, 3, Reading.FIRST_PRIMED))
    assert all(eq for _, _, eq in transport_check_schur(SQUARE, 3, Reading.FIRST_PLAIN))
    tally = resolve_reading(list(diag_indices(skew_shapes(3), (1, 2))) + [SQUARE], [2, 3])
    assert tally[Reading.FIRST_PLAIN] == 0
    assert tally[Reading.PRINTED] > 0
    assert tally[Reading.FIRST_PRIMED] > 0


@pytest.mark.parametrize("K", list(diag_indices(skew_shapes(3), (1, 2))), ids=lambda K: str(K.key()))
def test_schur_connected_sums_dp_naive_and_backends(K):
    for N in (2, 3, 4):
        for a in range(K.shape.p0 - 1, K.shape.p1 + 1):
            dp = connected_sum_schur(K, a, N)
            assert dp == connected_sum_schur(K, a, N, method="naive")
            if N < 4:
                assert dp == connected_sum_schur(K, a, N, backend=REFERENCE)
