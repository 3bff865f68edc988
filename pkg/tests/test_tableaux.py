"""Shapes, fillings, statistics, enumeration order, and the wire format."""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permtab import (
    Shape,
    Tableau,
    canonical_json,
    classify_cells,
    column_label_sets,
    count_by_statistics,
    count_fillings,
    count_tableaux,
    empty_tableau,
    enumerate_tableaux,
    fillings,
    is_valid,
    shape_from_column_labels,
    shape_from_row_sizes,
    statistics,
    tableau_from_dict,
    tableau_to_dict,
)
from permtab.tableaux import (
    CELL_COL_RESTRICTED,
    CELL_DOUBLY_RESTRICTED,
    CELL_ONE,
    CELL_ROW_RESTRICTED,
    CELL_ZERO,
)

TWELVE = Tableau(
    Shape((1, 2, 4, 7, 8, 10, 12), (11, 9, 6, 5, 3)),
    ((0, 1, 0, 0, 1), (0, 0, 1, 0, 1), (1, 1, 1, 1), (0, 1), (0, 1), (1,), ()),
)


class TestShape:
    def test_twelve_geometry(self):
        shape = TWELVE.shape
        assert shape.length == 12
        assert shape.row_sizes == (5, 5, 4, 2, 2, 1, 0)
        assert shape.col_heights == (6, 5, 3, 3, 2)
        assert shape.cell_count == 19
        assert shape.is_standard

    def test_from_row_sizes_matches_labeling(self):
        shape = shape_from_row_sizes((5, 5, 4, 2, 2, 1, 0))
        assert shape == TWELVE.shape

    def test_from_row_sizes_rejects_increase(self):
        with pytest.raises(ValueError):
            shape_from_row_sizes((2, 3))

    def test_from_column_labels_rejects_one(self):
        with pytest.raises(ValueError):
            shape_from_column_labels(3, (1,))

    def test_from_column_labels_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            shape_from_column_labels(3, (4,))

    def test_from_column_labels_rejects_duplicates(self):
        with pytest.raises(ValueError):
            shape_from_column_labels(4, (3, 3))

    def test_label_sets_must_be_disjoint(self):
        with pytest.raises(ValueError):
            Shape((1, 2), (2,))

    def test_row_order_enforced(self):
        with pytest.raises(ValueError):
            Shape((2, 1), (3,))


class TestValidity:
    def test_twelve_is_valid(self):
        assert is_valid(TWELVE)

    def test_uncovered_column_rejected(self):
        shape = shape_from_column_labels(2, (2,))
        assert not is_valid(Tableau(shape, ((0,),)))

    def test_forbidden_zero_rejected(self):
        # a 0 with a 1 above and a 1 to its left
        shape = shape_from_column_labels(4, (3, 4))
        t = Tableau(shape, ((0, 1), (1, 0)))
        assert not is_valid(t)

    def test_fill_must_match_shape(self):
        shape = shape_from_column_labels(2, (2,))
        with pytest.raises(ValueError):
            Tableau(shape, ((1, 1),))
        with pytest.raises(ValueError):
            Tableau(shape, ((1,), (1,)))
        with pytest.raises(ValueError):
            Tableau(shape, ((2,),))


class TestStatistics:
    def test_twelve_statistics(self):
        stats = statistics(TWELVE)
        assert stats.unrestricted_rows == frozenset({1, 4, 10, 12})
        assert stats.restricted_rows == frozenset({2, 7, 8})
        assert stats.unrestricted_cols == frozenset({3, 9, 11})
        assert stats.restricted_cols == frozenset({5, 6})
        assert stats.urr == 4
        assert stats.urc == 3
        assert stats.top_ones == 2
        assert stats.ones == 11
        assert stats.weight == 6
        assert stats.sign == -1

    def test_classification_agrees_with_statistics(self):
        for t in enumerate_tableaux(5):
            kinds = classify_cells(t)
            stats = statistics(t)
            row_restricted = {
                i
                for (i, _j), kind in kinds.items()
                if kind in (CELL_ROW_RESTRICTED, CELL_DOUBLY_RESTRICTED)
            }
            col_restricted = {
                j
                for (_i, j), kind in kinds.items()
                if kind in (CELL_COL_RESTRICTED, CELL_DOUBLY_RESTRICTED)
            }
            assert stats.restricted_rows == frozenset(row_restricted)
            assert stats.restricted_cols == frozenset(col_restricted)
            assert stats.ones == sum(
                1 for kind in kinds.values() if kind == CELL_ONE
            )

    def test_twelve_cell_kinds(self):
        kinds = classify_cells(TWELVE)
        assert kinds[(1, 11)] == CELL_ZERO
        assert kinds[(2, 5)] == CELL_COL_RESTRICTED
        assert kinds[(1, 6)] == CELL_COL_RESTRICTED
        assert kinds[(2, 9)] == CELL_ROW_RESTRICTED
        assert CELL_DOUBLY_RESTRICTED not in kinds.values()

    def test_doubly_restricted_marks_the_forbidden_zero(self):
        # A 0 below a 1 and right of a 1 is exactly what validity bans,
        # so the doubly-restricted kind only ever appears in invalid fills.
        bad = Tableau(Shape((1, 2), (4, 3)), ((1, 1), (1, 0)))
        assert not is_valid(bad)
        assert classify_cells(bad)[(2, 3)] == CELL_DOUBLY_RESTRICTED
        for t in enumerate_tableaux(5):
            assert CELL_DOUBLY_RESTRICTED not in classify_cells(t).values()

    def test_top_row_never_row_restricted(self):
        for t in enumerate_tableaux(5):
            stats = statistics(t)
            assert stats.urr >= 1
            assert t.shape.rows[0] in stats.unrestricted_rows


class TestEnumeration:
    def test_counts_match_factorials(self):
        for n in range(7):
            assert count_tableaux(n) == math.factorial(n)

    def test_enumerator_agrees_with_dp_counts(self):
        for n in range(6):
            for cols in column_label_sets(n):
                shape = shape_from_column_labels(n, cols)
                assert sum(1 for _ in fillings(shape)) == count_fillings(shape)

    def test_exact_order_n2(self):
        listed = list(enumerate_tableaux(2))
        assert listed[0] == empty_tableau(2)
        assert listed[1] == Tableau(shape_from_column_labels(2, (2,)), ((1,),))
        assert len(listed) == 2

    def test_all_enumerated_are_valid_and_distinct(self):
        seen = set()
        for t in enumerate_tableaux(5):
            assert is_valid(t)
            assert t not in seen
            seen.add(t)

    def test_length_zero_and_one(self):
        assert list(enumerate_tableaux(0)) == [
            Tableau(Shape((), ()), ())
        ]
        assert list(enumerate_tableaux(1)) == [empty_tableau(1)]

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_tableaux(-1))

    def test_count_by_statistics_totals(self):
        counter = count_by_statistics(6)
        assert sum(counter.values()) == math.factorial(6)
        by_hand = {}
        for t in enumerate_tableaux(6):
            stats = statistics(t)
            key = (stats.urc, stats.urr, stats.top_ones)
            by_hand[key] = by_hand.get(key, 0) + 1
        assert dict(counter) == by_hand


class TestWireFormat:
    def test_round_trip(self):
        d = tableau_to_dict(TWELVE)
        assert tableau_from_dict(d) == TWELVE
        assert tableau_from_dict(json.loads(canonical_json(d))) == TWELVE

    def test_strict_keys(self):
        d = tableau_to_dict(TWELVE)
        d["extra"] = 1
        with pytest.raises(ValueError):
            tableau_from_dict(d)
        del d["extra"]
        del d["n"]
        with pytest.raises(ValueError):
            tableau_from_dict(d)

    def test_n_must_match(self):
        d = tableau_to_dict(TWELVE)
        d["n"] = 13
        with pytest.raises(ValueError):
            tableau_from_dict(d)

    def test_canonical_json_is_compact(self):
        assert canonical_json({"a": [1, 2]}) == '{"a":[1,2]}'


@st.composite
def tableaux(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    candidates = [
        shape_from_column_labels(n, cols) for cols in column_label_sets(n)
    ]
    shape = draw(st.sampled_from(candidates))
    choices = list(fillings(shape))
    return draw(st.sampled_from(choices)) if choices else empty_tableau(n)


class TestInvariants:
    @given(tableaux())
    @settings(max_examples=60, deadline=None)
    def test_statistics_partition_labels(self, t):
        stats = statistics(t)
        assert stats.unrestricted_rows | stats.restricted_rows == set(
            t.shape.rows
        )
        assert stats.unrestricted_cols | stats.restricted_cols == set(
            t.shape.cols
        )
        assert not stats.unrestricted_rows & stats.restricted_rows
        assert not stats.unrestricted_cols & stats.restricted_cols

    @given(tableaux())
    @settings(max_examples=60, deadline=None)
    def test_weight_bounds(self, t):
        stats = statistics(t)
        assert stats.weight >= 0
        assert stats.weight == t.ones - len(t.shape.cols)

    @given(tableaux())
    @settings(max_examples=60, deadline=None)
    def test_dict_round_trip(self, t):
        assert tableau_from_dict(tableau_to_dict(t)) == t
