"""Permutation tableaux: 0/1 fillings of left-justified diagrams.

A *shape* is a left-justified diagram described by two disjoint sets of
positive integer labels: row labels, read top to bottom in increasing
order, and column labels, read left to right in decreasing order.  The
cell in row i and column j exists exactly when i < j.  For a standard
shape of length n the labels partition {1, ..., n}; they are handed out
by walking the southeast border from the northeast corner, each south
step labelling a row and each west step a column.  Rows may have size
zero.  The label 1 can never head a column: such a column would lie to
the right of every row and own no cells, and no filling can put the
required 1 into an empty column.

A *tableau* fills every cell of a shape with 0 or 1 so that

* every column contains at least one 1, and
* no 0 has both a 1 above it in its column and a 1 to its left in its
  row.

Restriction statistics drive everything downstream: a 0 with a 1 above
it is *row-restricted*, a 0 with a 1 to its left is *column-restricted*
(one cell can be both).  A row is unrestricted when it contains no
row-restricted 0; a column is unrestricted when it contains no
column-restricted 0.  ``statistics`` reports the four label sets plus
the number of 1s in the topmost row and the weight (ones minus number
of columns).

Enumeration order is deterministic and documented: column-label sets as
ascending tuples in lexicographic order, and for each shape the fillings
in row-major binary counting order (cells read top to bottom, left to
right, with 0 before 1).
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True)
class Shape:
    """Row and column labels of a left-justified diagram.

    ``rows`` must be strictly increasing, ``cols`` strictly decreasing,
    and the two sets disjoint.  Cell (i, j) exists iff i is a row label,
    j is a column label and i < j, so each row occupies a leftmost run
    of columns and each column a topmost run of rows.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(x, int) or x < 1 for x in self.rows + self.cols):
            raise ValueError("labels must be positive integers")
        if list(self.rows) != sorted(set(self.rows)):
            raise ValueError("row labels must be strictly increasing")
        if list(self.cols) != sorted(set(self.cols), reverse=True):
            raise ValueError("column labels must be strictly decreasing")
        if set(self.rows) & set(self.cols):
            raise ValueError("row and column labels must be disjoint")

    @cached_property
    def length(self) -> int:
        """Number of border labels (rows plus columns)."""
        return len(self.rows) + len(self.cols)

    @cached_property
    def row_sizes(self) -> tuple[int, ...]:
        return tuple(sum(1 for j in self.cols if j > i) for i in self.rows)

    @cached_property
    def col_heights(self) -> tuple[int, ...]:
        return tuple(sum(1 for i in self.rows if i < j) for j in self.cols)

    @cached_property
    def cell_count(self) -> int:
        return sum(self.row_sizes)

    @cached_property
    def is_standard(self) -> bool:
        """True when the labels are exactly 1..length."""
        return set(self.rows) | set(self.cols) == set(range(1, self.length + 1))

    @cached_property
    def row_index(self) -> dict[int, int]:
        return {label: r for r, label in enumerate(self.rows)}

    @cached_property
    def col_index(self) -> dict[int, int]:
        return {label: c for c, label in enumerate(self.cols)}


def shape_from_column_labels(n: int, cols: Iterable[int]) -> Shape:
    """Standard shape of length ``n`` with the given column labels.

    Column labels must be distinct members of {2, ..., n}; the remaining
    labels become rows.  Label 1 is rejected because a column labelled 1
    has no cells and therefore admits no valid filling.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    col_list = list(cols)
    col_set = set(col_list)
    if len(col_set) != len(col_list):
        raise ValueError("duplicate column labels")
    if 1 in col_set:
        raise ValueError("1 cannot label a column")
    if any(j < 2 or j > n for j in col_set):
        raise ValueError(f"column labels must lie in 2..{n}")
    rows = tuple(i for i in range(1, n + 1) if i not in col_set)
    return Shape(rows, tuple(sorted(col_set, reverse=True)))


def shape_from_row_sizes(sizes: Iterable[int]) -> Shape:
    """Standard shape recovered from its row sizes, top to bottom.

    Walks the south-east border from the northeast corner handing out
    labels 1, 2, ...: each row contributes a south step (its label),
    followed by one west step (a column label) per unit its size drops
    toward the next row.  Trailing zero-size rows are legal and produce
    row labels beyond every column.
    """
    sizes = tuple(sizes)
    if any(not isinstance(s, int) or s < 0 for s in sizes):
        raise ValueError("row sizes must be nonnegative integers")
    if any(a < b for a, b in zip(sizes, sizes[1:])):
        raise ValueError("row sizes must be weakly decreasing")
    rows: list[int] = []
    cols: list[int] = []
    label = 0
    widths = sizes + (0,)
    for r in range(len(sizes)):
        label += 1
        rows.append(label)
        for _ in range(widths[r] - widths[r + 1]):
            label += 1
            cols.append(label)
    return Shape(tuple(rows), tuple(reversed(cols)))


@dataclass(frozen=True)
class Tableau:
    """A 0/1 filling of a shape, one tuple of bits per row (top to bottom)."""

    shape: Shape
    fill: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        sizes = self.shape.row_sizes
        if len(self.fill) != len(sizes):
            raise ValueError("filling has wrong number of rows")
        for row, size in zip(self.fill, sizes):
            if len(row) != size:
                raise ValueError("row length does not match shape")
            if any(bit not in (0, 1) for bit in row):
                raise ValueError("entries must be 0 or 1")

    @property
    def ones(self) -> int:
        return sum(map(sum, self.fill))

    def entry(self, row_label: int, col_label: int) -> int:
        """Bit at the cell addressed by border labels."""
        r = self.shape.row_index[row_label]
        c = self.shape.col_index[col_label]
        if c >= self.shape.row_sizes[r]:
            raise KeyError(f"no cell at ({row_label}, {col_label})")
        return self.fill[r][c]


def empty_tableau(n: int) -> Tableau:
    """The all-rows tableau of length ``n`` (no columns, hence no cells)."""
    shape = shape_from_column_labels(n, ())
    return Tableau(shape, ((),) * len(shape.rows))


def is_valid(t: Tableau) -> bool:
    """Check the two filling rules.

    Every column (including any column that has no cells at all) must
    contain a 1, and no 0 may see a 1 above it and a 1 to its left.
    """
    col_one = [False] * len(t.shape.cols)
    for row in t.fill:
        row_one = False
        for c, bit in enumerate(row):
            if bit:
                row_one = True
                col_one[c] = True
            elif row_one and col_one[c]:
                return False
    return all(col_one)


CELL_ONE = "one"
CELL_ZERO = "zero"
CELL_ROW_RESTRICTED = "row_restricted"
CELL_COL_RESTRICTED = "col_restricted"
CELL_DOUBLY_RESTRICTED = "doubly_restricted"


def classify_cells(t: Tableau) -> dict[tuple[int, int], str]:
    """Kind of every cell, keyed by (row label, column label).

    Zeros are classified by what restricts them: a 1 above gives
    ``row_restricted``, a 1 to the left gives ``col_restricted``, both
    give ``doubly_restricted``, neither gives ``zero``.
    """
    shape = t.shape
    out: dict[tuple[int, int], str] = {}
    col_one = [False] * len(shape.cols)
    for r, row in enumerate(t.fill):
        row_one = False
        for c, bit in enumerate(row):
            key = (shape.rows[r], shape.cols[c])
            if bit:
                out[key] = CELL_ONE
                row_one = True
                col_one[c] = True
            else:
                above, left = col_one[c], row_one
                if above and left:
                    out[key] = CELL_DOUBLY_RESTRICTED
                elif above:
                    out[key] = CELL_ROW_RESTRICTED
                elif left:
                    out[key] = CELL_COL_RESTRICTED
                else:
                    out[key] = CELL_ZERO
    return out


@dataclass(frozen=True)
class TableauStatistics:
    """Restriction label sets and the derived counts for one tableau."""

    unrestricted_rows: frozenset[int]
    restricted_rows: frozenset[int]
    unrestricted_cols: frozenset[int]
    restricted_cols: frozenset[int]
    top_ones: int
    ones: int
    weight: int

    @property
    def urr(self) -> int:
        return len(self.unrestricted_rows)

    @property
    def urc(self) -> int:
        return len(self.unrestricted_cols)

    @property
    def sign(self) -> int:
        return -1 if self.urc % 2 else 1


def _scan_restrictions(
    fill: Iterable[tuple[int, ...]], ncols: int
) -> tuple[list[bool], list[bool], int]:
    """Row-restricted flags, column-restricted flags, and the ones count."""
    row_restr: list[bool] = []
    col_restr = [False] * ncols
    col_one = [False] * ncols
    ones = 0
    for row in fill:
        row_one = False
        restricted = False
        for c, bit in enumerate(row):
            if bit:
                ones += 1
                row_one = True
                col_one[c] = True
            else:
                if col_one[c]:
                    restricted = True
                if row_one:
                    col_restr[c] = True
        row_restr.append(restricted)
    return row_restr, col_restr, ones


def statistics(t: Tableau) -> TableauStatistics:
    """Restriction sets plus top-row ones and weight."""
    shape = t.shape
    row_restr, col_restr, ones = _scan_restrictions(t.fill, len(shape.cols))
    return TableauStatistics(
        unrestricted_rows=frozenset(
            lab for lab, r in zip(shape.rows, row_restr) if not r
        ),
        restricted_rows=frozenset(lab for lab, r in zip(shape.rows, row_restr) if r),
        unrestricted_cols=frozenset(
            lab for lab, r in zip(shape.cols, col_restr) if not r
        ),
        restricted_cols=frozenset(lab for lab, r in zip(shape.cols, col_restr) if r),
        top_ones=sum(t.fill[0]) if t.fill else 0,
        ones=ones,
        weight=ones - len(shape.cols),
    )


def column_label_sets(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of {2, ..., n} as ascending tuples, lexicographically."""

    def rec(lo: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(lo, n + 1):
            for tail in rec(first + 1):
                yield (first,) + tail

    return rec(2)


def _shape_cells(shape: Shape) -> list[tuple[int, int, bool]]:
    """Row-major cell list: (row index, column index, is bottom of column)."""
    heights = shape.col_heights
    return [
        (r, c, heights[c] - 1 == r)
        for r, size in enumerate(shape.row_sizes)
        for c in range(size)
    ]


def _raw_fillings(shape: Shape) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Valid fillings as bit grids, in row-major binary counting order."""
    cells = _shape_cells(shape)
    grid = [[0] * size for size in shape.row_sizes]
    col_one = [False] * len(shape.cols)
    total = len(cells)

    def rec(k: int, row_one: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == total:
            yield tuple(tuple(row) for row in grid)
            return
        r, c, bottom = cells[k]
        if c == 0:
            row_one = False
        # 0 first: skipped when it would break a rule.
        if not (row_one and col_one[c]) and not (bottom and not col_one[c]):
            grid[r][c] = 0
            yield from rec(k + 1, row_one)
        grid[r][c] = 1
        had_one = col_one[c]
        col_one[c] = True
        yield from rec(k + 1, True)
        col_one[c] = had_one
        grid[r][c] = 0

    return rec(0, False)


def fillings(shape: Shape) -> Iterator[Tableau]:
    """All valid tableaux of one shape, row-major binary counting order."""
    for grid in _raw_fillings(shape):
        yield Tableau(shape, grid)


def enumerate_tableaux(n: int) -> Iterator[Tableau]:
    """Every tableau of length ``n``, in the documented canonical order."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    for cols in column_label_sets(n):
        yield from fillings(shape_from_column_labels(n, cols))


def count_fillings(shape: Shape) -> int:
    """Count valid fillings by dynamic programming (no enumeration).

    Independent of the backtracking generator: states are (mask of
    columns holding a 1 so far, 1 seen in the current row), advanced
    cell by cell.  Used to cross-check the enumerator.
    """
    states: dict[tuple[int, bool], int] = {(0, False): 1}
    for r, c, bottom in _shape_cells(shape):
        nxt: dict[tuple[int, bool], int] = defaultdict(int)
        bit_mask = 1 << c
        for (mask, row_one), count in states.items():
            if c == 0:
                row_one = False
            has_one = bool(mask & bit_mask)
            if not (row_one and has_one) and not (bottom and not has_one):
                nxt[(mask, row_one)] += count
            nxt[(mask | bit_mask, True)] += count
        states = dict(nxt)
    return sum(states.values())


def count_tableaux(n: int) -> int:
    """Number of tableaux of length ``n`` via the DP counter."""
    return sum(
        count_fillings(shape_from_column_labels(n, cols))
        for cols in column_label_sets(n)
    )


@lru_cache(maxsize=None)
def count_by_statistics(n: int) -> Counter:
    """Counter over (urc, urr, top-row ones) for all tableaux of length n.

    One full enumeration sweep; cached so that the several identity
    checks built on it share the work.
    """
    out: Counter = Counter()
    for cols in column_label_sets(n):
        shape = shape_from_column_labels(n, cols)
        ncols = len(shape.cols)
        rows = shape.rows
        for grid in _raw_fillings(shape):
            row_restr, col_restr, _ones = _scan_restrictions(grid, ncols)
            urc = ncols - sum(col_restr)
            urr = len(rows) - sum(row_restr)
            top = sum(grid[0]) if grid else 0
            out[(urc, urr, top)] += 1
    return out


# --- JSON wire format ----------------------------------------------------
#
# {"n": int, "cols": [desc], "rows": [asc], "fill": [[bits], ...]}
# with n = number of border labels and one fill row per row label, top to
# bottom.  Serialization is canonical: fixed key order, no whitespace.


def canonical_json(obj) -> str:
    """Compact JSON with the dict's insertion order preserved."""
    return json.dumps(obj, separators=(",", ":"))


def tableau_to_dict(t: Tableau) -> dict:
    return {
        "n": t.shape.length,
        "cols": list(t.shape.cols),
        "rows": list(t.shape.rows),
        "fill": [list(row) for row in t.fill],
    }


def tableau_from_dict(d: Mapping) -> Tableau:
    if not isinstance(d, Mapping):
        raise ValueError("expected a JSON object")
    if set(d) != {"n", "cols", "rows", "fill"}:
        raise ValueError("expected exactly the keys n, cols, rows, fill")
    n, cols, rows, fill = d["n"], d["cols"], d["rows"], d["fill"]
    if not isinstance(cols, list) or not isinstance(rows, list):
        raise ValueError("cols and rows must be lists")
    if not isinstance(fill, list) or not all(isinstance(row, list) for row in fill):
        raise ValueError("fill must be a list of rows")
    shape = Shape(tuple(rows), tuple(cols))
    if n != shape.length:
        raise ValueError("n must equal the number of border labels")
    return Tableau(shape, tuple(tuple(row) for row in fill))
