"""
Indices, skew Young diagrams, diagonal intervals and summation regions.

Cells are ``(row, column)`` pairs.  The diagonal of a cell is ``p = row - col``
and the cells of diagonal ``p`` are identified with the interval
``J_p = {j : (j + p, j) in D}`` of their columns.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Cell = Tuple[int, int]


class ShapeError(ValueError):
    """Cell set is not an admissible skew diagram."""


# ---------------------------------------------------------------------------
# linear indices


@dataclass(frozen=True)
class LinearIndex:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if any(k < 1 for k in parts):
            raise ValueError(f"index parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> LinearIndex:
        """``"1,2"`` -> (1, 2); the empty string is the empty index."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad index syntax: {text!r}") from exc

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def as_parts(k) -> Tuple[int, ...]:
    if isinstance(k, LinearIndex):
        return k.parts
    return LinearIndex(tuple(k)).parts


def compositions(weight: int) -> Iterator[Tuple[int, ...]]:
    """All 2**(weight-1) compositions of ``weight`` (just ``()`` for 0)."""
    if weight == 0:
        yield ()
        return
    for first in range(1, weight + 1):
        for rest in compositions(weight - first):
            yield (first,) + rest


def indices_up_to(max_weight: int, include_empty: bool = False) -> Iterator[Tuple[int, ...]]:
    for w in range(0 if include_empty else 1, max_weight + 1):
        yield from compositions(w)


# ---------------------------------------------------------------------------
# intervals and tuples on them


@dataclass(frozen=True)
class Interval:
    """The integer interval ``[lo, hi]``; empty when ``lo > hi`` (stored as [1, 0])."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi and (self.lo, self.hi) != (1, 0):
            object.__setattr__(self, "lo", 1)
            object.__setattr__(self, "hi", 0)

    @classmethod
    def empty(cls) -> Interval:
        return cls(1, 0)

    @classmethod
    def of(cls, points: Iterable[int]) -> Interval:
        pts = sorted(set(points))
        if not pts:
            return cls.empty()
        if pts[-1] - pts[0] + 1 != len(pts):
            raise ValueError(f"{pts} is not an interval")
        return cls(pts[0], pts[-1])

    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, j: int) -> bool:
        return self.lo <= j <= self.hi

    def __str__(self) -> str:
        if self.is_empty():
            return "{}"
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class TupleOnInterval:
    """Integers ``(m_j)`` indexed by an interval; ``values[i]`` is ``m_{lo+i}``."""

    interval: Interval
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.interval):
            raise ValueError("tuple length does not match its interval")

    def __getitem__(self, j: int) -> int:
        if j not in self.interval:
            raise KeyError(j)
        return self.values[j - self.interval.lo]

    def get(self, j: int, default: int) -> int:
        return self.values[j - self.interval.lo] if j in self.interval else default

    def items(self):
        return zip(self.interval, self.values)

    def is_nondecreasing(self) -> bool:
        v = self.values
        return all(v[i] <= v[i + 1] for i in range(len(v) - 1))

    def shifted(self, c: int) -> TupleOnInterval:
        return TupleOnInterval(self.interval, tuple(x + c for x in self.values))


def is_consecutive(J: Interval, Jp: Interval) -> bool:
    """``Jp`` is one of ``J``, ``J - {j1}``, ``J + {j0-1}``, ``J - {j1} + {j0-1}``."""
    if J.is_empty():
        return False
    j0, j1 = J.lo, J.hi
    candidates = (
        Interval(j0, j1),
        Interval(j0, j1 - 1),
        Interval(j0 - 1, j1),
        Interval(j0 - 1, j1 - 1),
    )
    return Jp in candidates


def _check_pair(m: TupleOnInterval, n: TupleOnInterval) -> None:
    if not is_consecutive(m.interval, n.interval):
        raise ValueError(f"intervals ({m.interval}, {n.interval}) are not consecutive")


def rel_strict(m: TupleOnInterval, n: TupleOnInterval) -> bool:
    """``m ◁ n``: ``m_j < n_j`` on the overlap and ``n_{j-1} <= m_j`` across."""
    _check_pair(m, n)
    return _strict(m.interval.lo, m.values, n.interval.lo, n.values)


def rel_weak(m: TupleOnInterval, n: TupleOnInterval) -> bool:
    """``m ⊴ n``: ``m_j <= n_j`` on the overlap and ``n_{j-1} < m_j`` across."""
    _check_pair(m, n)
    return _weak(m.interval.lo, m.values, n.interval.lo, n.values)


# Unchecked variants on raw (lo, values) pairs; the evaluators call these in
# their inner loops after validating the interval pair once.


def _strict(mlo: int, mv: Sequence[int], nlo: int, nv: Sequence[int]) -> bool:
    nhi = nlo + len(nv) - 1
    for i, x in enumerate(mv):
        j = mlo + i
        if nlo <= j <= nhi and not x < nv[j - nlo]:
            return False
        if nlo <= j - 1 <= nhi and not nv[j - 1 - nlo] <= x:
            return False
    return True


def _weak(mlo: int, mv: Sequence[int], nlo: int, nv: Sequence[int]) -> bool:
    nhi = nlo + len(nv) - 1
    for i, x in enumerate(mv):
        j = mlo + i
        if nlo <= j <= nhi and not x <= nv[j - nlo]:
            return False
        if nlo <= j - 1 <= nhi and not nv[j - 1 - nlo] < x:
            return False
    return True


def tuples_on(interval: Interval, lo: int, hi: int, nondecreasing: bool = False) -> Iterator[Tuple[int, ...]]:
    """All tuples in ``[lo, hi]^interval`` (optionally only non-decreasing ones)."""
    size = len(interval)
    if not nondecreasing:
        yield from product(range(lo, hi + 1), repeat=size)
        return

    def rec(prefix, start):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for x in range(start, hi + 1):
            prefix.append(x)
            yield from rec(prefix, x)
            prefix.pop()

    yield from rec([], lo)


# ---------------------------------------------------------------------------
# skew shapes


class SkewShape:
    """
    A skew Young diagram given by its cells.

    The constructor rejects cell sets that are not order-convex (i.e. not of
    the form lambda/mu), that skip a diagonal, or whose adjacent diagonals do
    not form consecutive interval pairs.

    >>> SkewShape([(1, 2), (2, 1), (2, 2)]).diagonals()
    [(-1, Interval(lo=2, hi=2)), (0, Interval(lo=2, hi=2)), (1, Interval(lo=1, hi=1))]
    """

    __slots__ = ("cells", "_diagonals")

    def __init__(self, cells: Iterable[Sequence[int]]):
        cs = frozenset((int(i), int(j)) for i, j in cells)
        if len(cs) and min(min(c) for c in cs) < 1:
            raise ShapeError("cell coordinates must be positive")
        self.cells = cs
        self._diagonals = self._validate()

    def _validate(self) -> List[Tuple[int, Interval]]:
        cs = self.cells
        if not cs:
            return []
        rows: Dict[int, List[int]] = {}
        for i, j in cs:
            rows.setdefault(i, []).append(j)
        # order-convexity: (i, j), (i', j') in D with i <= i', j <= j' forces the box
        for (i, j), (a, b) in product(cs, cs):
            if i <= a and j <= b:
                for x in range(i, a + 1):
                    for y in range(j, b + 1):
                        if (x, y) not in cs:
                            raise ShapeError(f"cells {sorted(cs)} are not a skew diagram: missing {(x, y)}")
        by_diag: Dict[int, List[int]] = {}
        for i, j in cs:
            by_diag.setdefault(i - j, []).append(j)
        p0, p1 = min(by_diag), max(by_diag)
        diags = []
        for p in range(p0, p1 + 1):
            if p not in by_diag:
                raise ShapeError(f"diagonal {p} is empty")
            try:
                diags.append((p, Interval.of(by_diag[p])))
            except ValueError as exc:
                raise ShapeError(f"diagonal {p} is not an interval") from exc
        for (p, J), (_, Jn) in zip(diags, diags[1:]):
            if not is_consecutive(J, Jn):
                raise ShapeError(f"diagonals {p} and {p + 1} are not consecutive")
        return diags

    # -- constructors ----------------------------------------------------

    @classmethod
    def row(cls, length: int) -> SkewShape:
        return cls([(1, j) for j in range(1, length + 1)])

    @classmethod
    def column(cls, length: int) -> SkewShape:
        return cls([(i, 1) for i in range(1, length + 1)])

    @classmethod
    def skew(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
        """The diagram ``outer / inner`` of two partitions."""
        inner = list(inner) + [0] * (len(outer) - len(inner))
        return cls([(i + 1, j) for i, (lam, mu) in enumerate(zip(outer, inner)) for j in range(mu + 1, lam + 1)])

    # -- queries ---------------------------------------------------------

    def diagonals(self) -> List[Tuple[int, Interval]]:
        return list(self._diagonals)

    @property
    def p0(self) -> int:
        return self._diagonals[0][0]

    @property
    def p1(self) -> int:
        return self._diagonals[-1][0]

    def interval(self, p: int) -> Interval:
        for pp, J in self._diagonals:
            if pp == p:
                return J
        return Interval.empty()

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells)

    def normalized(self) -> SkewShape:
        if not self.cells:
            return self
        di = min(i for i, _ in self.cells) - 1
        dj = min(j for _, j in self.cells) - 1
        return SkewShape([(i - di, j - dj) for i, j in self.cells])

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewShape) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"SkewShape({self.sorted_cells()})"

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, obj: dict) -> SkewShape:
        return cls(obj["cells"])

    def picture(self) -> str:
        if not self.cells:
            return "(empty)"
        rows = range(min(i for i, _ in self.cells), max(i for i, _ in self.cells) + 1)
        cols = range(1, max(j for _, j in self.cells) + 1)
        return "\n".join("".join("#" if (i, j) in self.cells else "." for j in cols) for i in rows)


@dataclass(frozen=True)
class DiagIndex:
    """A diagonally constant index: a skew shape plus a weight ``k_p`` per diagonal."""

    shape: SkewShape
    weights: Dict[int, int] = field(hash=False)

    def __post_init__(self):
        w = {int(p): int(k) for p, k in self.weights.items()}
        expected = {p for p, _ in self.shape.diagonals()}
        if set(w) != expected:
            raise ValueError(f"weights must be given exactly on diagonals {sorted(expected)}, got {sorted(w)}")
        if any(k < 1 for k in w.values()):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", w)

    @classmethod
    def constant(cls, shape: SkewShape, k: int = 1) -> DiagIndex:
        return cls(shape, {p: k for p, _ in shape.diagonals()})

    @classmethod
    def column(cls, parts) -> DiagIndex:
        """``(k_1, ..., k_r)`` written top to bottom in one column."""
        parts = as_parts(parts)
        return cls(SkewShape.column(len(parts)), {i: k for i, k in enumerate(parts)})

    @classmethod
    def row(cls, parts) -> DiagIndex:
        """``(k_1, ..., k_r)`` written left to right in one row."""
        parts = as_parts(parts)
        return cls(SkewShape.row(len(parts)), {-i: k for i, k in enumerate(parts)})

    @classmethod
    def from_json(cls, obj: dict) -> DiagIndex:
        shape = SkewShape(obj["cells"])
        if "weights" in obj:
            return cls(shape, {int(p): int(k) for p, k in obj["weights"].items()})
        return cls.constant(shape, 1)

    def to_json(self) -> dict:
        out = self.shape.to_json()
        out["weights"] = {str(p): k for p, k in sorted(self.weights.items())}
        return out

    def key(self) -> tuple:
        return (tuple(self.shape.sorted_cells()), tuple(sorted(self.weights.items())))

    def cell_weight(self, cell: Cell) -> int:
        return self.weights[cell[0] - cell[1]]

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagIndex) and self.key() == other.key()

    def __str__(self) -> str:
        w = ",".join(f"{p}:{k}" for p, k in sorted(self.weights.items()))
        return f"{self.shape.sorted_cells()} k={{{w}}}"


def diagonals(shape: SkewShape) -> List[Tuple[int, Interval]]:
    return shape.diagonals()


def _partitions_in_box(rows: int, cols: int) -> Iterator[Tuple[int, ...]]:
    def rec(prefix, cap):
        if len(prefix) == rows:
            yield tuple(prefix)
            return
        for x in range(cap, -1, -1):
            yield from rec(prefix + [x], x)

    yield from rec([], cols)


def skew_shapes(max_cells: int, min_cells: int = 1) -> List[SkewShape]:
    """
    Every admissible skew shape with ``min_cells..max_cells`` cells, up to
    translation, in a deterministic order.
    """
    found = {}
    for lam in _partitions_in_box(max_cells, max_cells):
        for mu in _partitions_in_box(max_cells, max_cells):
            if any(m > l for m, l in zip(mu, lam)):
                continue
            size = sum(lam) - sum(mu)
            if not min_cells <= size <= max_cells:
                continue
            cells = [(i + 1, j) for i in range(max_cells) for j in range(mu[i] + 1, lam[i] + 1)]
            try:
                shape = SkewShape(cells).normalized()
            except ShapeError:
                continue
            found[tuple(shape.sorted_cells())] = shape
    return [found[k] for k in sorted(found, key=lambda c: (len(c), c))]


def diag_indices(shapes: Iterable[SkewShape], weights: Sequence[int] = (1, 2)) -> Iterator[DiagIndex]:
    """All diagonally constant indices on the given shapes with entries from ``weights``."""
    for shape in shapes:
        ps = [p for p, _ in shape.diagonals()]
        for ks in product(weights, repeat=len(ps)):
            yield DiagIndex(shape, dict(zip(ps, ks)))


# ---------------------------------------------------------------------------
# semi-standard tableaux


def enumerate_ssyt(shape: SkewShape, N: int, method: str = "rows") -> Iterator[Tuple[int, ...]]:
    """
    Semi-standard fillings of ``shape`` with entries in ``[1, N-1]``.

    Fillings are tuples aligned with ``shape.sorted_cells()``.  ``method``
    selects the characterisation: ``"rows"`` checks row-weak/column-strict
    conditions cell by cell, ``"diagonals"`` chains tuples along the diagonals
    with the strict interleaving relation.
    """
    if method == "rows":
        return _ssyt_rows(shape, N)
    if method == "diagonals":
        return _ssyt_diagonals(shape, N)
    raise ValueError(f"unknown method {method!r}")


def _ssyt_rows(shape: SkewShape, N: int) -> Iterator[Tuple[int, ...]]:
    cells = shape.sorted_cells()
    index = {c: t for t, c in enumerate(cells)}
    filling = [0] * len(cells)

    def rec(t):
        if t == len(cells):
            yield tuple(filling)
            return
        i, j = cells[t]
        lo = 1
        if (i, j - 1) in index:
            lo = max(lo, filling[index[(i, j - 1)]])
        if (i - 1, j) in index:
            lo = max(lo, filling[index[(i - 1, j)]] + 1)
        for x in range(lo, N):
            filling[t] = x
            yield from rec(t + 1)

    # row-major order puts left and upper neighbours first
    yield from rec(0)


def _ssyt_diagonals(shape: SkewShape, N: int) -> Iterator[Tuple[int, ...]]:
    diags = shape.diagonals()
    cells = shape.sorted_cells()
    index = {c: t for t, c in enumerate(cells)}
    if not diags:
        yield ()
        return
    chosen: List[Tuple[int, ...]] = []

    def rec(t):
        if t == len(diags):
            filling = [0] * len(cells)
            for (p, J), vals in zip(diags, chosen):
                for j, x in zip(J, vals):
                    filling[index[(j + p, j)]] = x
            yield tuple(filling)
            return
        p, J = diags[t]
        for vals in tuples_on(J, 1, N - 1):
            if t and not _strict(diags[t - 1][1].lo, chosen[-1], J.lo, vals):
                continue
            chosen.append(vals)
            yield from rec(t + 1)
            chosen.pop()

    yield from rec(0)


# ---------------------------------------------------------------------------
# generic regions


@dataclass
class Region:
    """
    Integer points ``x_v`` in per-variable ranges subject to pairwise ``<`` and
    ``<=`` constraints.  Points are produced in lexicographic order of
    ``variables``.
    """

    variables: List[str]
    bounds: Dict[str, Tuple[int, int]]
    constraints: List[Tuple[str, str, str]] = field(default_factory=list)

    _TOKEN = re.compile(r"\s*(<=|≤|<|[A-Za-z_][A-Za-z_0-9]*|-?\d+)")

    @classmethod
    def parse(cls, text: str, default_bounds: Optional[Tuple[int, int]] = None) -> Region:
        """
        Parse chained inequalities separated by ``;``.

        >>> list(Region.parse("0 < n1 <= n2 < 3").points())
        [(1, 1), (1, 2), (2, 2)]
        """
        variables: List[str] = []
        bounds: Dict[str, List[Optional[int]]] = {}
        constraints: List[Tuple[str, str, str]] = []
        for stmt in text.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            tokens, pos = [], 0
            while pos < len(stmt):
                m = cls._TOKEN.match(stmt, pos)
                if not m:
                    raise ValueError(f"cannot parse {stmt[pos:]!r}")
                tokens.append(m.group(1))
                pos = m.end()
            terms, ops = tokens[0::2], tokens[1::2]
            if len(terms) != len(ops) + 1 or any(op not in ("<", "<=", "≤") for op in ops):
                raise ValueError(f"malformed chain {stmt!r}")
            for t in terms:
                if not _is_int(t) and t not in bounds:
                    variables.append(t)
                    bounds[t] = [None, None]
            for a, op, b in zip(terms, ops, terms[1:]):
                op = "<=" if op == "≤" else op
                if _is_int(a) and _is_int(b):
                    if not (int(a) < int(b) if op == "<" else int(a) <= int(b)):
                        bounds.setdefault("__infeasible__", [1, 0])
                elif _is_int(a):
                    lo = int(a) + (1 if op == "<" else 0)
                    cur = bounds[b][0]
                    bounds[b][0] = lo if cur is None else max(cur, lo)
                elif _is_int(b):
                    hi = int(b) - (1 if op == "<" else 0)
                    cur = bounds[a][1]
                    bounds[a][1] = hi if cur is None else min(cur, hi)
                else:
                    constraints.append((a, op, b))
        # propagate known bounds along the variable-variable constraints
        for _ in range(len(variables) + 1):
            changed = False
            for a, op, b in constraints:
                s = 1 if op == "<" else 0
                if bounds[a][0] is not None and (bounds[b][0] is None or bounds[b][0] < bounds[a][0] + s):
                    bounds[b][0] = bounds[a][0] + s
                    changed = True
                if bounds[b][1] is not None and (bounds[a][1] is None or bounds[a][1] > bounds[b][1] - s):
                    bounds[a][1] = bounds[b][1] - s
                    changed = True
            if not changed:
                break
        final: Dict[str, Tuple[int, int]] = {}
        for v in variables:
            lo, hi = bounds[v]
            if lo is None or hi is None:
                if default_bounds is None:
                    raise ValueError(f"variable {v} is unbounded")
                lo = default_bounds[0] if lo is None else lo
                hi = default_bounds[1] if hi is None else hi
            final[v] = (lo, hi)
        region = cls(variables, final, constraints)
        if "__infeasible__" in bounds:
            region.bounds = {v: (1, 0) for v in variables}
        return region

    def points(self) -> Iterator[Tuple[int, ...]]:
        order = self.variables
        pos = {v: i for i, v in enumerate(order)}
        # constraints become bounds on the later variable from the earlier one
        lower: List[List[Tuple[int, int]]] = [[] for _ in order]
        upper: List[List[Tuple[int, int]]] = [[] for _ in order]
        for a, op, b in self.constraints:
            ia, ib = pos[a], pos[b]
            strict = 1 if op == "<" else 0
            if ia == ib:
                if strict:
                    return
                continue
            if ia < ib:
                lower[ib].append((ia, strict))
            else:
                upper[ia].append((ib, strict))
        values = [0] * len(order)
        ranges = [self.bounds[v] for v in order]

        def rec(t):
            if t == len(order):
                yield tuple(values)
                return
            lo, hi = ranges[t]
            for s, strict in lower[t]:
                lo = max(lo, values[s] + strict)
            for s, strict in upper[t]:
                hi = min(hi, values[s] - strict)
            for x in range(lo, hi + 1):
                values[t] = x
                yield from rec(t + 1)

        yield from rec(0)


def _is_int(tok: str) -> bool:
    return tok.lstrip("-").isdigit()


def enumerate_region(region, N: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Points of a :class:`Region` or of a chain-of-inequalities string."""
    if isinstance(region, str):
        region = Region.parse(region, default_bounds=(1, N - 1) if N is not None else None)
    return region.points()
