"""Zigzag routing between tableaux and permutations.

Each border label sends a path into the diagram: a row label enters its
row heading east, a column label enters its column heading south.  The
path turns at every 1 and walks straight through every 0; the border
label where it leaves the diagram is the image of the entry label.
Collecting exits over all labels maps a valid tableau of length n to a
permutation of 1..n, bijectively; the row labels of the preimage are
exactly the weak excedance positions of the image, which is how the
inverse recovers the shape before searching for the unique filling.

The routing itself never inspects validity, so it also serves the
extended tableaux used by the type-B construction (labels that are not
1..n, rows with no cells, columns with no cells); paths for cell-less
labels exit where they entered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .permstat import check_perm, four_sets, weak_excedance_positions
from .tableaux import Shape, Tableau, _shape_cells, statistics

HEAD_EAST = "E"
HEAD_SOUTH = "S"


@dataclass(frozen=True)
class ZigzagPath:
    """One traced path: visited cells plus the direction of travel into each."""

    entry: int
    exit: int
    cells: tuple[tuple[int, int], ...]
    headings: tuple[str, ...]


def trace_path(t: Tableau, label: int) -> ZigzagPath:
    """Walk the path of one border label, cell by cell."""
    shape = t.shape
    if label in shape.row_index:
        r = shape.row_index[label]
        c = 0
        heading = HEAD_EAST
        if shape.row_sizes[r] == 0:
            return ZigzagPath(label, label, (), ())
    elif label in shape.col_index:
        c = shape.col_index[label]
        r = 0
        heading = HEAD_SOUTH
        if shape.col_heights[c] == 0:
            return ZigzagPath(label, label, (), ())
    else:
        raise ValueError(f"{label} is not a border label of this shape")

    cells: list[tuple[int, int]] = []
    headings: list[str] = []
    while True:
        cells.append((shape.rows[r], shape.cols[c]))
        headings.append(heading)
        if t.fill[r][c]:
            heading = HEAD_SOUTH if heading == HEAD_EAST else HEAD_EAST
        if heading == HEAD_EAST:
            c += 1
            if c >= shape.row_sizes[r]:
                exit_label = shape.rows[r]
                break
        else:
            r += 1
            if r >= shape.col_heights[c]:
                exit_label = shape.cols[c]
                break
    return ZigzagPath(label, exit_label, tuple(cells), tuple(headings))


def exit_map(t: Tableau) -> dict[int, int]:
    """Exit label for every entry label, in one row-major sweep.

    Every cell carries one eastbound and one southbound line; a 1 makes
    the two lines trade places, a 0 lets them cross.  Tracking which
    entry label rides each line gives all n exits in one pass.  Agrees
    with tracing every path individually (tested exhaustively).
    """
    shape = t.shape
    rows, cols = shape.rows, shape.cols
    heights = shape.col_heights
    out: dict[int, int] = {}
    for c, h in enumerate(heights):
        if h == 0:
            out[cols[c]] = cols[c]
    col_wire = list(cols)
    for r, size in enumerate(shape.row_sizes):
        wire = rows[r]
        row = t.fill[r]
        for c in range(size):
            if row[c]:
                wire, col_wire[c] = col_wire[c], wire
            if heights[c] - 1 == r:
                out[col_wire[c]] = cols[c]
        out[wire] = rows[r]
    return out


def to_permutation(t: Tableau) -> tuple[int, ...]:
    """Image of a tableau with standard labels 1..n."""
    if not t.shape.is_standard:
        raise ValueError("labels must be exactly 1..n; use exit_map instead")
    exits = exit_map(t)
    return tuple(exits[i] for i in range(1, t.shape.length + 1))


def from_exit_map(targets: Mapping[int, int]) -> Tableau:
    """The unique tableau whose routing realizes the given exits.

    ``targets`` maps each border label to its exit label; the two label
    sets must coincide.  Rows are the labels not exceeding their exit,
    and the filling is found by backtracking over the recovered shape,
    propagating the line occupants cell by cell and pruning on every
    rule and every forced exit.  Finding no filling or more than one
    means the map is not a routing image (impossible for permutations);
    that raises RuntimeError rather than guessing.
    """
    labels = sorted(targets)
    if sorted(targets.values()) != labels:
        raise ValueError("exit labels must be a rearrangement of entry labels")
    rows = tuple(i for i in labels if targets[i] >= i)
    cols = tuple(sorted((i for i in labels if targets[i] < i), reverse=True))
    shape = Shape(rows, cols)
    sizes, heights = shape.row_sizes, shape.col_heights

    for label, size in zip(rows, sizes):
        if size == 0 and targets[label] != label:
            raise RuntimeError("no filling routes to this map")

    cells = [
        (r, c, heights[c] - 1 == r, c == sizes[r] - 1)
        for r, size in enumerate(sizes)
        for c in range(size)
    ]
    total = len(cells)
    grid = [[0] * size for size in sizes]
    col_wire = list(cols)
    col_one = [False] * len(cols)
    solutions: list[tuple[tuple[int, ...], ...]] = []

    def rec(k: int, row_wire: int, row_one: bool) -> None:
        if len(solutions) > 1:
            return
        if k == total:
            solutions.append(tuple(tuple(row) for row in grid))
            return
        r, c, bottom, row_end = cells[k]
        if c == 0:
            row_wire = rows[r]
            row_one = False
        # bit 0: lines cross.
        if not (row_one and col_one[c]) and not (bottom and not col_one[c]):
            if (not bottom or targets[col_wire[c]] == cols[c]) and (
                not row_end or targets[row_wire] == rows[r]
            ):
                grid[r][c] = 0
                rec(k + 1, row_wire, row_one)
        # bit 1: lines trade places.
        new_row_wire, old_col_wire = col_wire[c], col_wire[c]
        col_wire[c] = row_wire
        had_one = col_one[c]
        col_one[c] = True
        if (not bottom or targets[col_wire[c]] == cols[c]) and (
            not row_end or targets[new_row_wire] == rows[r]
        ):
            grid[r][c] = 1
            rec(k + 1, new_row_wire, True)
            grid[r][c] = 0
        col_wire[c] = old_col_wire
        col_one[c] = had_one

    rec(0, 0, False)
    if not solutions:
        raise RuntimeError("no filling routes to this map")
    if len(solutions) > 1:
        raise RuntimeError("routing image has more than one preimage")
    return Tableau(shape, solutions[0])


def from_permutation(p: Sequence[int]) -> Tableau:
    """Preimage of a permutation of 1..n under the routing map."""
    p = check_perm(p)
    return from_exit_map({i: v for i, v in enumerate(p, 1)})


@dataclass(frozen=True)
class PathViolation:
    """One way a pair of paths breaks the meeting discipline."""

    kind: str  # "shared_edge" or "zero_meeting"
    entries: tuple[int, int]
    where: tuple


def path_intersection_violations(t: Tableau) -> tuple[PathViolation, ...]:
    """Check that paths share no edge and meet again only on 1s.

    For every pair of paths: the unit segments travelled must be
    disjoint, and of the cells the two paths have in common, every one
    after the first (in travel order) must hold a 1.  Returns all
    violations found; an empty result is the expected outcome for valid
    tableaux.
    """
    labels = sorted(set(t.shape.rows) | set(t.shape.cols))
    traces = {lab: trace_path(t, lab) for lab in labels}
    edges = {
        lab: set(zip(tr.cells, tr.cells[1:])) for lab, tr in traces.items()
    }
    cellsets = {lab: set(tr.cells) for lab, tr in traces.items()}
    out: list[PathViolation] = []
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            shared_edges = edges[a] & edges[b]
            for edge in sorted(shared_edges):
                out.append(PathViolation("shared_edge", (a, b), edge))
            shared = cellsets[a] & cellsets[b]
            if len(shared) > 1:
                ordered = [cell for cell in traces[a].cells if cell in shared]
                for cell in ordered[1:]:
                    if not t.entry(*cell):
                        out.append(PathViolation("zero_meeting", (a, b), cell))
    return tuple(out)


def restriction_sets_match(t: Tableau) -> bool:
    """Do the tableau's restriction sets map onto the image's four classes?

    The image values sitting at restricted-column labels must be exactly
    the mid-points that are not weak excedances, and so on through all
    four pairings (restricted columns / unrestricted columns /
    restricted rows / unrestricted rows against the four value classes).
    """
    p = to_permutation(t)
    stats = statistics(t)
    classes = four_sets(p)

    def image(label_set: frozenset[int]) -> frozenset[int]:
        return frozenset(p[i - 1] for i in label_set)

    return (
        image(stats.restricted_cols) == classes.nonweak_mid
        and image(stats.unrestricted_cols) == classes.nonweak_nonmid
        and image(stats.restricted_rows) == classes.weak_mid
        and image(stats.unrestricted_rows) == classes.weak_nonmid
    )


def row_labels_are_weak_excedances(t: Tableau) -> bool:
    """Row labels of a standard tableau = weak excedance positions of its image."""
    return weak_excedance_positions(to_permutation(t)) == frozenset(t.shape.rows)
