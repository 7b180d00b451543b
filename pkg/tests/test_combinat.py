from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmsw.combinat import (
    DiagIndex,
    Interval,
    LinearIndex,
    Region,
    ShapeError,
    SkewShape,
    TupleOnInterval,
    compositions,
    enumerate_region,
    enumerate_ssyt,
    indices_up_to,
    is_consecutive,
    rel_strict,
    rel_weak,
    skew_shapes,
    tuples_on,
)

from oracles import ssyt

CORNER = SkewShape([(1, 2), (2, 1), (2, 2)])


def T(lo, *values):
    return TupleOnInterval(Interval(lo, lo + len(values) - 1), values)


# -- indices -------------------------------------------------------------


def test_linear_index_parsing():
    assert LinearIndex.parse("1,2").parts == (1, 2)
    assert LinearIndex.parse("").parts == ()
    with pytest.raises(ValueError):
        LinearIndex.parse("1,x")
    with pytest.raises(ValueError):
        LinearIndex((1, 0))


@pytest.mark.parametrize("w", range(1, 8))
def test_compositions_per_weight(w):
    comps = list(compositions(w))
    assert len(comps) == 2 ** (w - 1) == len(set(comps))
    assert all(sum(c) == w and min(c) >= 1 for c in comps)


def test_indices_up_to_counts():
    assert len(list(indices_up_to(6))) == 2**6 - 1
    assert list(indices_up_to(0, include_empty=True)) == [()]


# -- intervals and relations ----------------------------------------------


def test_consecutive_pairs():
    assert is_consecutive(Interval(2, 2), Interval(2, 2))
    assert is_consecutive(Interval(2, 2), Interval(1, 1))
    assert not is_consecutive(Interval(1, 3), Interval(2, 3))
    assert is_consecutive(Interval(1, 1), Interval.empty())
    assert not is_consecutive(Interval.empty(), Interval(1, 1))


def test_strict_relation_examples():
    assert rel_strict(T(2, 1), T(2, 2))
    assert rel_strict(T(2, 2), T(1, 2))
    assert not rel_strict(T(1, 3), T(1, 3))


def test_weak_relation_examples():
    assert rel_weak(T(1, 3), T(1, 3))
    assert not rel_weak(T(1, 4), T(1, 3))
    assert not rel_weak(T(1, 2), T(0, 2, 5))


def test_relations_reject_non_consecutive_intervals():
    with pytest.raises(ValueError):
        rel_strict(T(1, 1, 1, 1), T(2, 1, 1))


def brute_relation(m, n, strict):
    """Direct reading of the two defining clauses."""
    for j in m.interval:
        if j in n.interval:
            if not (m[j] < n[j] if strict else m[j] <= n[j]):
                return False
        if j - 1 in n.interval:
            if not (n[j - 1] <= m[j] if strict else n[j - 1] < m[j]):
                return False
    return True


@given(st.integers(1, 3), st.integers(0, 3), st.data())
@settings(max_examples=300)
def test_relations_match_the_definition(L, form, data):
    J = Interval(1, L)
    Jp = [Interval(1, L), Interval(1, L - 1), Interval(0, L), Interval(0, L - 1)][form]
    vals = st.integers(0, 5)
    m = TupleOnInterval(J, data.draw(st.lists(vals, min_size=len(J), max_size=len(J))))
    n = TupleOnInterval(Jp, data.draw(st.lists(vals, min_size=len(Jp), max_size=len(Jp))))
    assert rel_strict(m, n) == brute_relation(m, n, True)
    assert rel_weak(m, n) == brute_relation(m, n, False)


@given(st.integers(0, 4), st.integers(0, 3), st.integers(0, 6))
def test_nondecreasing_tuples_are_stars_and_bars(length, lo, width):
    J = Interval(1, length) if length else Interval.empty()
    hi = lo + width
    got = list(tuples_on(J, lo, hi, nondecreasing=True))
    assert len(got) == comb(width + length, length)
    assert all(TupleOnInterval(J, t).is_nondecreasing() for t in got)


# -- shapes ----------------------------------------------------------------


def test_diagonal_listings():
    assert SkewShape([(1, 1)]).diagonals() == [(0, Interval(1, 1))]
    assert SkewShape([(1, 1), (2, 1)]).diagonals() == [(0, Interval(1, 1)), (1, Interval(1, 1))]
    assert CORNER.diagonals() == [(-1, Interval(2, 2)), (0, Interval(2, 2)), (1, Interval(1, 1))]
    assert (CORNER.p0, CORNER.p1) == (-1, 1)


def test_invalid_shapes_are_rejected():
    with pytest.raises(ShapeError):
        SkewShape([(1, 1), (2, 2)])  # not connected along the anti-diagonal order
    with pytest.raises(ShapeError):
        SkewShape([(1, 1), (1, 3)])  # gap in a row
    with pytest.raises(ShapeError):
        SkewShape([(0, 1)])


def test_empty_shape_is_legal():
    assert SkewShape([]).diagonals() == []
    assert list(enumerate_ssyt(SkewShape([]), 4)) == [()]


def test_skew_constructor_and_json():
    s = SkewShape.skew((2, 2), (1,))
    assert s == CORNER
    assert SkewShape.from_json(s.to_json()) == s
    K = DiagIndex(CORNER, {-1: 1, 0: 2, 1: 1})
    assert DiagIndex.from_json(K.to_json()) == K


def test_weights_must_cover_the_diagonals():
    with pytest.raises(ValueError):
        DiagIndex(CORNER, {0: 1})


def test_shape_catalogue_is_unique_and_valid():
    shapes = skew_shapes(5)
    assert len({tuple(s.sorted_cells()) for s in shapes}) == len(shapes)
    assert all(1 <= len(s.cells) <= 5 for s in shapes)
    assert SkewShape.row(3).normalized() in shapes
    assert CORNER.normalized() in shapes


# -- tableaux ------------------------------------------------------------


def test_ssyt_examples():
    assert list(enumerate_ssyt(SkewShape([(1, 1)]), 3)) == [(1,), (2,)]
    square = SkewShape.skew((2, 2))
    assert list(enumerate_ssyt(square, 3)) == [(1, 1, 2, 2)]
    assert sorted(enumerate_ssyt(CORNER, 3)) == [(1, 1, 2), (1, 2, 2)]


@pytest.mark.parametrize("shape", skew_shapes(6), ids=lambda s: s.picture().replace("\n", "/"))
def test_row_and_diagonal_characterisations_agree(shape):
    for N in (1, 2, 3, 4):
        rows = list(enumerate_ssyt(shape, N, "rows"))
        diags = sorted(enumerate_ssyt(shape, N, "diagonals"))
        assert sorted(rows) == diags
        if len(shape.cells) <= 5:
            assert diags == sorted(ssyt(shape.sorted_cells(), N))


# -- regions -------------------------------------------------------------


def test_region_examples():
    assert list(enumerate_region("0 < n1 <= n2 < 3")) == [(1, 1), (1, 2), (2, 2)]
    assert list(enumerate_region("0 < m1 < m2 < 3")) == [(1, 2)]
    flat = "0 < n11 < 3; 0 < n21 <= n22 < 3; n11 < n21"
    assert list(enumerate_region(flat)) == [(1, 2, 2)]


def test_region_defaults_and_errors():
    assert list(enumerate_region("a < b", 3)) == [(1, 2)]
    with pytest.raises(ValueError):
        Region.parse("a < b")
    assert list(enumerate_region("2 < 1; 0 < a < 3")) == []


@given(st.integers(1, 4), st.integers(1, 5), st.lists(st.booleans(), min_size=3, max_size=3))
def test_region_chains_match_brute_force(length, N, strict):
    ops = ["<" if s else "<=" for s in strict[: length - 1]]
    names = [f"x{i}" for i in range(length)]
    text = f"0 < {names[0]}"
    for op, v in zip(ops, names[1:]):
        text += f" {op} {v}"
    text += f" < {N}"
    expected = [
        x for x in product(range(1, N), repeat=length)
        if all((a < b) if op == "<" else (a <= b) for a, b, op in zip(x, x[1:], ops))
    ]
    assert list(enumerate_region(text)) == expected
