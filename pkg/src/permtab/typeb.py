"""Type-B permutation tableaux: shifted diagrams and the symmetric bijection.

A type-B shape of size n is a base diagram on labels 1..n (columns a
set C of labels, rows the complement - both may be empty) topped by
|C| *added rows* of sizes 1, 2, ..., |C|.  The added row of size s
spans the s largest column labels; its rightmost cell is its *diagonal*
cell, sitting in the s-th largest column, and the row is labelled by
the negative of that column label.  A filling is valid when the two
ordinary rules hold over the whole diagram (every column has a 1; no 0
with a 1 above and a 1 to the left) and additionally no diagonal 0 has
a 1 to its left.

``symmetrize`` doubles a type-B tableau into an ordinary tableau on
labels 1..2n: each label keeps its role at label+n, each reflected
label 2n+1-label takes the opposite role, and cells below the
anti-diagonal mirror their partners.  Deleting the all-zero rows and
columns of the doubled tableau leaves the *core*; routing the doubled
tableau (equivalently: routing the core and fixing the deleted labels)
maps type-B tableaux bijectively onto the symmetric permutations of
1..2n.

The unrestricted statistic: a positive row counts when it has no
row-restricted 0 and at least one 1; a column label j counts when
column j has no column-restricted 0 and the added row labelled -j has
no row-restricted 0 (a diagonal 0 never counts as row-restricted).
The count equals the number of unrestricted columns of the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .permstat import check_perm, is_symmetric_perm
from .tableaux import Shape, Tableau, _scan_restrictions
from .zigzag import exit_map, from_exit_map


@dataclass(frozen=True)
class ShiftedShape:
    """Base columns plus the staircase of added rows."""

    n: int
    cols: tuple[int, ...]  # descending, subset of 1..n

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if list(self.cols) != sorted(set(self.cols), reverse=True):
            raise ValueError("column labels must be strictly decreasing")
        if any(c < 1 or c > self.n for c in self.cols):
            raise ValueError(f"column labels must lie in 1..{self.n}")

    @cached_property
    def k(self) -> int:
        return len(self.cols)

    @cached_property
    def pos_rows(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if i not in set(self.cols))

    @cached_property
    def added_labels(self) -> tuple[int, ...]:
        """Labels of the added rows, top to bottom."""
        return tuple(-c for c in self.cols)

    @cached_property
    def row_labels(self) -> tuple[int, ...]:
        """All row labels, top to bottom: added rows then base rows."""
        return self.added_labels + self.pos_rows

    @cached_property
    def row_sizes(self) -> tuple[int, ...]:
        added = tuple(s + 1 for s in range(self.k))
        base = tuple(sum(1 for c in self.cols if c > i) for i in self.pos_rows)
        return added + base

    @cached_property
    def col_heights(self) -> tuple[int, ...]:
        return tuple(
            (self.k - c) + sum(1 for i in self.pos_rows if i < label)
            for c, label in enumerate(self.cols)
        )

    @cached_property
    def cell_count(self) -> int:
        return sum(self.row_sizes)


@dataclass(frozen=True)
class BTableau:
    """A 0/1 filling of a shifted shape, added rows first (top to bottom)."""

    shape: ShiftedShape
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

    def entry(self, row_label: int, col_label: int) -> int:
        rows = self.shape.row_labels
        try:
            r = rows.index(row_label)
            c = self.shape.cols.index(col_label)
        except ValueError as exc:
            raise KeyError(f"no cell at ({row_label}, {col_label})") from exc
        if c >= self.shape.row_sizes[r]:
            raise KeyError(f"no cell at ({row_label}, {col_label})")
        return self.fill[r][c]


def _bshape_cells(shape: ShiftedShape) -> list[tuple[int, int, bool, bool]]:
    """Row-major: (row ordinal, col index, is bottom of column, is diagonal).

    Column c has no cells in the added rows above ordinal c, so its
    bottom sits at ordinal c + height - 1 (not height - 1 as in the
    unshifted case).
    """
    heights = shape.col_heights
    k = shape.k
    cells = []
    for r, size in enumerate(shape.row_sizes):
        for c in range(size):
            cells.append((r, c, c + heights[c] - 1 == r, r < k and c == r))
    return cells


def is_valid_btableau(t: BTableau) -> bool:
    """Both ordinary rules plus the diagonal rule."""
    shape = t.shape
    col_one = [False] * shape.k
    for r, row in enumerate(t.fill):
        row_one = False
        for c, bit in enumerate(row):
            if bit:
                row_one = True
                col_one[c] = True
            else:
                if row_one and col_one[c]:
                    return False
                if r < shape.k and c == r and row_one:
                    return False  # diagonal 0 with a 1 to its left
    return all(col_one)


def column_label_sets_b(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of {1, ..., n} as ascending tuples, lexicographically."""

    def rec(lo: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(lo, n + 1):
            for tail in rec(first + 1):
                yield (first,) + tail

    return rec(1)


def _raw_fillings_b(shape: ShiftedShape) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = _bshape_cells(shape)
    grid = [[0] * size for size in shape.row_sizes]
    col_one = [False] * shape.k
    total = len(cells)

    def rec(k: int, row_one: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == total:
            yield tuple(tuple(row) for row in grid)
            return
        r, c, bottom, diagonal = cells[k]
        if c == 0:
            row_one = False
        allowed_zero = (
            not (row_one and col_one[c])
            and not (bottom and not col_one[c])
            and not (diagonal and row_one)
        )
        if allowed_zero:
            grid[r][c] = 0
            yield from rec(k + 1, row_one)
        grid[r][c] = 1
        had_one = col_one[c]
        col_one[c] = True
        yield from rec(k + 1, True)
        col_one[c] = had_one
        grid[r][c] = 0

    return rec(0, False)


def enumerate_btableaux(n: int) -> Iterator[BTableau]:
    """Every type-B tableau of size ``n``: column sets in lexicographic
    order, fillings row-major in binary counting order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for cols in column_label_sets_b(n):
        shape = ShiftedShape(n, tuple(sorted(cols, reverse=True)))
        for grid in _raw_fillings_b(shape):
            yield BTableau(shape, grid)


def count_btableaux(n: int) -> int:
    return sum(1 for _ in enumerate_btableaux(n))


@dataclass(frozen=True)
class BStatistics:
    """Unrestricted labels of a type-B tableau."""

    unrestricted_rows: frozenset[int]  # positive row labels
    unrestricted_cols: frozenset[int]  # column labels

    @property
    def ur(self) -> int:
        return len(self.unrestricted_rows | self.unrestricted_cols)

    @property
    def sign(self) -> int:
        return -1 if self.ur % 2 else 1


def btableau_statistics(t: BTableau) -> BStatistics:
    """Unrestricted positive rows and unrestricted columns.

    A positive row counts when it has no row-restricted 0 and at least
    one 1.  A column label j counts when the column has no
    column-restricted 0 and the added row -j has no row-restricted 0;
    a 0 in a diagonal cell is never row-restricted (it is the top of
    its column, so the exemption is stated for clarity only).
    """
    shape = t.shape
    k = shape.k
    col_one = [False] * k
    col_restr = [False] * k
    row_restr = [False] * len(t.fill)
    row_has_one = [False] * len(t.fill)
    for r, row in enumerate(t.fill):
        row_one = False
        for c, bit in enumerate(row):
            if bit:
                row_one = True
                row_has_one[r] = True
                col_one[c] = True
            else:
                if col_one[c] and not (r < k and c == r):
                    row_restr[r] = True
                if row_one:
                    col_restr[c] = True
    ur_rows = frozenset(
        label
        for r, label in enumerate(shape.row_labels)
        if label > 0 and not row_restr[r] and row_has_one[r]
    )
    # added row with label -cols[s] sits at ordinal s
    ur_cols = frozenset(
        shape.cols[c]
        for c in range(k)
        if not col_restr[c] and not row_restr[c]
    )
    return BStatistics(ur_rows, ur_cols)


# --- symmetrization ----------------------------------------------------------


@dataclass(frozen=True)
class SymTableau:
    """The doubled tableau, its core, and the labels deleted in between."""

    symmetric: Tableau
    core: Tableau
    removed: frozenset[int]


def symmetrize(t: BTableau) -> SymTableau:
    """Double a type-B tableau onto labels 1..2n and extract its core.

    Label L of the original becomes L+n with the same role; the
    reflected label 2n+1-L takes the opposite role.  A doubled cell on
    or above the anti-diagonal (row+column >= 2n+1) copies the original
    cell it came from; a cell below it mirrors its reflected partner.
    The core drops every all-zero row and column (labels keep their
    values, so the core is a tableau on a sparse label set).
    """
    shape = t.shape
    n = shape.n
    rows_s = tuple(
        sorted({n + 1 - c for c in shape.cols} | {i + n for i in shape.pos_rows})
    )
    cols_s = tuple(
        sorted(
            {n + 1 - i for i in shape.pos_rows} | {c + n for c in shape.cols},
            reverse=True,
        )
    )

    def source_bit(a: int, b: int) -> int:
        if a + b < 2 * n + 1:
            return source_bit(2 * n + 1 - b, 2 * n + 1 - a)
        row_part = a - n if a > n else -(n + 1 - a)
        return t.entry(row_part, b - n)

    sym_shape = Shape(rows_s, cols_s)
    fill = tuple(
        tuple(source_bit(a, b) for b in cols_s[: sym_shape.row_sizes[r]])
        for r, a in enumerate(rows_s)
    )
    symmetric = Tableau(sym_shape, fill)

    row_any = {a: any(row) for a, row in zip(rows_s, fill)}
    col_any = {b: False for b in cols_s}
    for row in fill:
        for c, bit in enumerate(row):
            if bit:
                col_any[cols_s[c]] = True
    kept_rows = tuple(a for a in rows_s if row_any[a])
    kept_cols = tuple(b for b in cols_s if col_any[b])
    kept_col_pos = [c for c, b in enumerate(cols_s) if col_any[b]]
    core_fill = tuple(
        tuple(fill[rows_s.index(a)][c] for c in kept_col_pos if cols_s[c] > a)
        for a in kept_rows
    )
    core = Tableau(Shape(kept_rows, kept_cols), core_fill)
    removed = frozenset(set(rows_s) | set(cols_s)) - set(kept_rows) - set(kept_cols)
    return SymTableau(symmetric, core, frozenset(removed))


def to_symmetric_perm(t: BTableau) -> tuple[int, ...]:
    """Route the doubled tableau; the image is a symmetric permutation.

    Computed twice - once on the doubled tableau, once on the core with
    the removed labels as fixed points - and the routes must agree.
    """
    sym = symmetrize(t)
    full = exit_map(sym.symmetric)
    via_core = exit_map(sym.core)
    via_core.update({label: label for label in sym.removed})
    if full != via_core:
        raise RuntimeError("doubled and core routings disagree")
    size = 2 * t.shape.n
    return tuple(full[i] for i in range(1, size + 1))


def from_symmetric_perm(p: Sequence[int]) -> BTableau:
    """The type-B tableau routing to a given symmetric permutation.

    Fixed points mark deleted labels (a fixed point at most n was a
    column of the doubled tableau, above n a row); the remaining values
    route the core, which is found by the ordinary inverse search.
    Rebuilding the doubled tableau and folding it back across the
    anti-diagonal recovers the type-B tableau.
    """
    p = check_perm(p)
    if not is_symmetric_perm(p):
        raise ValueError("not a symmetric permutation")
    size = len(p)
    n = size // 2
    targets = {i: v for i, v in enumerate(p, 1) if v != i}
    core = from_exit_map(targets)
    rows_s = tuple(
        sorted(
            [i for i, v in enumerate(p, 1) if v == i and i > n]
            + [i for i, v in enumerate(p, 1) if v > i]
        )
    )
    cols_s = tuple(
        sorted((i for i in range(1, size + 1) if i not in set(rows_s)), reverse=True)
    )
    core_rows = set(core.shape.rows)
    core_cols = set(core.shape.cols)

    def ts_bit(a: int, b: int) -> int:
        if a in core_rows and b in core_cols:
            return core.entry(a, b)
        return 0

    bcols = tuple(b - n for b in cols_s if b > n)
    shape_b = ShiftedShape(n, bcols)
    if set(shape_b.pos_rows) != {a - n for a in rows_s if a > n}:
        raise RuntimeError("folded labels are inconsistent")
    added_fill = tuple(
        tuple(ts_bit(n + 1 - bcols[s], bcols[c] + n) for c in range(s + 1))
        for s in range(shape_b.k)
    )
    base_fill = tuple(
        tuple(ts_bit(i + n, c + n) for c in bcols if c > i)
        for i in shape_b.pos_rows
    )
    t = BTableau(shape_b, added_fill + base_fill)
    if not is_valid_btableau(t):
        raise RuntimeError("folded tableau violates the filling rules")
    return t


# --- JSON wire format --------------------------------------------------------
#
# {"n": int, "k": int, "base_cols": [desc], "pos_rows": [asc],
#  "fill": [[bits], ...]}  with added rows first, top to bottom.


def btableau_to_dict(t: BTableau) -> dict:
    return {
        "n": t.shape.n,
        "k": t.shape.k,
        "base_cols": list(t.shape.cols),
        "pos_rows": list(t.shape.pos_rows),
        "fill": [list(row) for row in t.fill],
    }


def btableau_from_dict(d: Mapping) -> BTableau:
    if not isinstance(d, Mapping):
        raise ValueError("expected a JSON object")
    if set(d) != {"n", "k", "base_cols", "pos_rows", "fill"}:
        raise ValueError("expected exactly the keys n, k, base_cols, pos_rows, fill")
    shape = ShiftedShape(d["n"], tuple(d["base_cols"]))
    if d["k"] != shape.k:
        raise ValueError("k must equal the number of base columns")
    if tuple(d["pos_rows"]) != shape.pos_rows:
        raise ValueError("pos_rows must be the ascending complement of base_cols")
    fill = d["fill"]
    if not isinstance(fill, list) or not all(isinstance(row, list) for row in fill):
        raise ValueError("fill must be a list of rows")
    return BTableau(shape, tuple(tuple(row) for row in fill))
