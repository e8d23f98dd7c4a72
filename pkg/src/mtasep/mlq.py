"""Multi-line queues (MLQs) and the box-labelling procedure.

An MLQ with type ``m`` is an ``r x n`` grid whose row ``i`` (1-based, top to
bottom) holds ``m_1 + ... + m_i`` boxes. Rows are stored as column bitmasks,
bit ``j`` meaning a box in column ``j`` (0-based). Labelling proceeds row by
row: every box of the previous row, taken in increasing label order, claims
the first free box weakly to its right (cyclically) in the current row, and the
boxes nobody claimed get the row's own index as label.

:func:`count_all` does not label MLQs one by one. The labels of row ``i + 1``
depend only on the labelled row ``i`` and the box set of row ``i + 1``, so it
pushes a multiset of labelled rows down the grid, which shares the work for
all MLQs with a common labelled prefix.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetExceeded, default_budget
from .words import TypeVector, Word, check_type, type_of, as_word

Labels = tuple[int, ...]  # one labelled row, 0 for an empty cell


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _columns(mask: int, n: int) -> list[int]:
    return [j for j in range(n) if mask >> j & 1]


def _mask(cols) -> int:
    out = 0
    for j in cols:
        out |= 1 << j
    return out


@dataclass(frozen=True)
class MLQ:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or not self.rows:
            raise ValueError("an MLQ needs n >= 1 and at least one row")
        full = (1 << self.n) - 1
        if any(row & ~full for row in self.rows):
            raise ValueError("box outside the grid")
        counts = [_popcount(row) for row in self.rows]
        if counts[-1] != self.n:
            raise ValueError(f"bottom row must be full, has {counts[-1]} of {self.n} boxes")
        mult = [counts[0]] + [b - a for a, b in zip(counts, counts[1:])]
        check_type(mult, relaxed=True)

    @classmethod
    def from_columns(cls, n: int, rows: Sequence[Sequence[int]]) -> "MLQ":
        """Build from 0-based column lists, one list per row, top row first."""
        return cls(n, tuple(_mask(cols) for cols in rows))

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def row_counts(self) -> tuple[int, ...]:
        return tuple(_popcount(row) for row in self.rows)

    @property
    def type(self) -> TypeVector:
        c = self.row_counts
        return (c[0],) + tuple(b - a for a, b in zip(c, c[1:]))

    def columns(self) -> list[list[int]]:
        return [_columns(row, self.n) for row in self.rows]

    def has_box(self, row: int, col: int) -> bool:
        return bool(self.rows[row] >> col & 1)

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "rows": [[j + 1 for j in cols] for cols in self.columns()]}


@dataclass(frozen=True)
class LabelledMLQ:
    base: MLQ
    labels: tuple[Labels, ...]

    @property
    def bottom_word(self) -> Word:
        return self.labels[-1]

    def to_dict(self) -> dict:
        d = self.base.to_dict()
        d["labels"] = [[x for x in row if x] for row in self.labels]
        return d


def label_row(prev: Labels, row_cols: Sequence[int], level: int, descending_ties: bool = False) -> Labels:
    """Labels for the row below ``prev`` whose boxes sit in ``row_cols``.

    ``level`` is the 1-based index of the new row, used for unclaimed boxes.
    Ties between equal labels in ``prev`` are served left to right by column
    (right to left with ``descending_ties``).
    """
    n = len(prev)
    out = [0] * n
    free = [False] * n
    for j in row_cols:
        free[j] = True
    sign = -1 if descending_ties else 1
    order = sorted((l, sign * j) for j, l in enumerate(prev) if l)
    for l, sj in order:
        j = sign * sj
        for step in range(n):
            c = (j + step) % n
            if free[c]:
                free[c] = False
                out[c] = l
                break
        else:
            raise ValueError("row has fewer boxes than the row above it")
    for j in row_cols:
        if free[j]:
            out[j] = level
    return tuple(out)


def _top_labels(cols: Sequence[int], n: int) -> Labels:
    out = [0] * n
    for j in cols:
        out[j] = 1
    return tuple(out)


def label(q: MLQ, descending_ties: bool = False, check_order: bool = False) -> LabelledMLQ:
    """Run the labelling procedure on ``q``.

    With ``check_order`` the labelling is recomputed with the opposite tie
    order and an ``AssertionError`` is raised if the two disagree.
    """
    cols = q.columns()
    rows = [_top_labels(cols[0], q.n)]
    for i in range(1, q.r):
        rows.append(label_row(rows[-1], cols[i], i + 1, descending_ties))
    out = LabelledMLQ(q, tuple(rows))
    if check_order:
        other = label(q, descending_ties=not descending_ties)
        assert other.labels == out.labels, f"labelling depends on tie order for {q}"
    return out


def bottom_word(q: MLQ) -> Word:
    return label(q).bottom_word


def partition_function(m: Sequence[int], relaxed: bool = False) -> int:
    """Number of m-MLQs: the product over rows of C(n, m_1 + ... + m_i)."""
    m = check_type(m, relaxed=relaxed)
    n = sum(m)
    partial = 0
    out = 1
    for k in m:
        partial += k
        out *= comb(n, partial)
    return out


def _row_sizes(m: TypeVector) -> list[int]:
    sizes, acc = [], 0
    for k in m:
        acc += k
        sizes.append(acc)
    return sizes


def _check_budget(m: TypeVector, relaxed: bool, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    z = partition_function(m, relaxed=relaxed)
    if z > budget:
        raise BudgetExceeded(f"type {m} has {z} MLQs, budget is {budget}")


def enumerate_mlqs(m: Sequence[int], relaxed: bool = False, budget: int | None = None) -> Iterator[MLQ]:
    """Yield every MLQ of type ``m``; rows vary independently, top row outermost."""
    m = check_type(m, relaxed=relaxed)
    _check_budget(m, relaxed, budget)
    n = sum(m)
    choices = [[_mask(c) for c in combinations(range(n), k)] for k in _row_sizes(m)]
    for rows in product(*choices):
        yield MLQ(n, rows)


@lru_cache(maxsize=256)
def _count_all(m: TypeVector) -> dict[Word, int]:
    n = sum(m)
    sizes = _row_sizes(m)
    states: dict[Labels, int] = defaultdict(int)
    for cols in combinations(range(n), sizes[0]):
        states[_top_labels(cols, n)] += 1
    for i, k in enumerate(sizes[1:], start=2):
        nxt: dict[Labels, int] = defaultdict(int)
        row_choices = list(combinations(range(n), k))
        for prev, mult in states.items():
            for cols in row_choices:
                nxt[label_row(prev, cols, i)] += mult
        states = nxt
    return dict(states)


def count_all(m: Sequence[int], relaxed: bool = False, budget: int | None = None) -> dict[Word, int]:
    """Map each word of type ``m`` to the number of MLQs representing it.

    Words with no representing MLQ are absent (for strict types every word is
    represented). The values sum to ``partition_function(m)``.
    """
    m = check_type(m, relaxed=relaxed)
    _check_budget(m, relaxed, budget)
    return dict(_count_all(m))


def bracket(u: Sequence[int], r: int | None = None, budget: int | None = None) -> int:
    """Number of MLQs representing ``u``.

    By default the MLQ has one row per letter up to ``max(u)``. Passing a
    larger ``r`` counts MLQs with extra full rows at the bottom (relaxed type
    with trailing zeros), which gives the same number.
    """
    u = as_word(u)
    m = type_of(u)
    relaxed = False
    if r is not None:
        if r < len(m):
            raise ValueError(f"r={r} is smaller than the largest letter {len(m)}")
        relaxed = r > len(m)
        m = m + (0,) * (r - len(m))
    return count_all(m, relaxed=relaxed, budget=budget).get(u, 0)


def mlqs_representing(u: Sequence[int], budget: int | None = None) -> list[LabelledMLQ]:
    """All labelled MLQs whose bottom row spells ``u``, in enumeration order."""
    u = as_word(u)
    out = []
    for q in enumerate_mlqs(type_of(u), budget=budget):
        lq = label(q)
        if lq.bottom_word == u:
            out.append(lq)
    return out


def beta_alpha_forward(q: MLQ) -> MLQ:
    """Map an MLQ representing ``r (r-1) w`` to one representing ``(r-1)(r-1) w``.

    The only change is a new box in row r - 1, column 1. The result has type
    ``(..., m_{r-1} + 1, m_r - 1)``, possibly with a trailing zero.
    """
    r = q.r
    u = bottom_word(q)
    if r < 2 or q.n < 2 or u[0] != r or u[1] != r - 1:
        raise ValueError(f"bottom word {u} does not begin with {r},{r - 1}")
    # cell directly above the leading r is empty for any MLQ with this bottom word
    assert not q.has_box(r - 2, 0)
    rows = list(q.rows)
    rows[r - 2] |= 1
    return MLQ(q.n, tuple(rows))


def beta_alpha_backward(q: MLQ) -> MLQ:
    """Inverse of :func:`beta_alpha_forward`."""
    r = q.r
    u = bottom_word(q)
    if r < 2 or q.n < 2 or u[0] != r - 1 or u[1] != r - 1:
        raise ValueError(f"bottom word {u} does not begin with {r - 1},{r - 1}")
    if not q.has_box(r - 2, 0) or (r >= 3 and q.has_box(r - 3, 0)):
        raise ValueError("column 1 does not have the shape produced by the forward map")
    rows = list(q.rows)
    rows[r - 2] &= ~1
    return MLQ(q.n, tuple(rows))


# rendering

def render_ascii(q: MLQ | LabelledMLQ) -> str:
    """One line per row: ``[l]`` for a labelled box, ``[ ]`` for an unlabelled one, ``.`` for empty."""
    if isinstance(q, LabelledMLQ):
        cells = [[f"[{x}]" if x else "." for x in row] for row in q.labels]
    else:
        cells = [["[ ]" if q.has_box(i, j) else "." for j in range(q.n)] for i in range(q.r)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.center(width) for c in row).rstrip() for row in cells)


def to_json(q: MLQ | LabelledMLQ) -> str:
    return json.dumps(q.to_dict())


def from_dict(d: dict) -> MLQ:
    return MLQ.from_columns(d["n"], [[j - 1 for j in cols] for cols in d["rows"]])
