"""Shifted tableaux: shapes, validity, statistics, and the doubling maps."""

import itertools

import pytest

from permtab import (
    BTableau,
    ShiftedShape,
    Tableau,
    btableau_from_dict,
    btableau_statistics,
    btableau_to_dict,
    count_btableaux,
    empty_tableau,
    enumerate_btableaux,
    from_symmetric_perm,
    is_valid_btableau,
    statistics,
    symmetrize,
    tableau_to_dict,
    to_symmetric_perm,
)
from permtab.typeb import column_label_sets_b

EIGHT = btableau_from_dict(
    {
        "n": 8,
        "k": 4,
        "base_cols": [8, 6, 3, 2],
        "pos_rows": [1, 4, 5, 7],
        "fill": [
            [0],
            [1, 1],
            [0, 0, 0],
            [0, 1, 0, 1],
            [1, 1, 1, 1],
            [0, 1],
            [0, 0],
            [1],
        ],
    }
)

SIXTEEN_PERM = (8, 1, 12, 4, 3, 7, 11, 2, 15, 6, 10, 14, 13, 5, 16, 9)


class TestShiftedShape:
    def test_worked_example_geometry(self):
        shape = EIGHT.shape
        assert shape.k == 4
        assert shape.added_labels == (-8, -6, -3, -2)
        assert shape.pos_rows == (1, 4, 5, 7)
        assert shape.row_labels == (-8, -6, -3, -2, 1, 4, 5, 7)
        assert shape.row_sizes == (1, 2, 3, 4, 4, 2, 2, 1)
        assert shape.col_heights == (8, 6, 3, 2)
        assert shape.cell_count == 19

    def test_column_height_equals_label(self):
        # In a shifted shape every column reaches exactly as deep as its label.
        for n in range(5):
            for cols in column_label_sets_b(n):
                shape = ShiftedShape(n, tuple(sorted(cols, reverse=True)))
                assert shape.col_heights == shape.cols

    def test_validation_errors(self):
        with pytest.raises(ValueError):
            ShiftedShape(3, (2, 3))  # not descending
        with pytest.raises(ValueError):
            ShiftedShape(3, (4,))  # out of range
        with pytest.raises(ValueError):
            ShiftedShape(3, (2, 2))  # duplicate
        with pytest.raises(ValueError):
            BTableau(ShiftedShape(2, (2,)), ((1, 1), (1,)))  # row too wide


class TestValidity:
    def test_worked_example_is_valid(self):
        assert is_valid_btableau(EIGHT)

    def test_diagonal_zero_with_one_to_its_left(self):
        shape = ShiftedShape(3, (3, 2, 1))
        bad = BTableau(shape, ((1,), (1, 0), (0, 1, 1)))
        assert not is_valid_btableau(bad)
        good = BTableau(shape, ((1,), (1, 1), (0, 1, 1)))
        assert is_valid_btableau(good)

    def test_uncovered_column_rejected(self):
        shape = ShiftedShape(2, (2,))
        assert not is_valid_btableau(BTableau(shape, ((0,), (0,))))

    def test_forbidden_zero_rejected(self):
        # Row 1 holds (1, 0): the 0 sits below a 1 and right of a 1.
        shape = ShiftedShape(3, (3, 2))
        bad = BTableau(shape, ((1,), (0, 1), (1, 0)))
        assert not is_valid_btableau(bad)


class TestEnumeration:
    def test_counts_are_signed_factorials(self):
        import math

        for n in range(5):
            assert count_btableaux(n) == 2**n * math.factorial(n)

    def test_exact_small_enumeration(self):
        tableaux = list(enumerate_btableaux(2))
        assert len(tableaux) == 8
        per_shape = {}
        for t in tableaux:
            per_shape[t.shape.cols] = per_shape.get(t.shape.cols, 0) + 1
        assert per_shape == {(): 1, (1,): 1, (2, 1): 3, (2,): 3}
        assert tableaux[0].fill == ((), ())
        assert tableaux[1].shape.cols == (1,)
        assert tableaux[1].fill == ((1,), ())

    def test_all_valid_and_distinct(self):
        seen = set()
        for t in enumerate_btableaux(3):
            assert is_valid_btableau(t)
            key = (t.shape.cols, t.fill)
            assert key not in seen
            seen.add(key)
        assert len(seen) == 48


class TestStatistics:
    def test_worked_example(self):
        stats = btableau_statistics(EIGHT)
        assert stats.unrestricted_rows == frozenset({1, 7})
        assert stats.unrestricted_cols == frozenset({8, 6})
        assert stats.ur == 4
        assert stats.sign == 1

    def test_empty_tableau(self):
        (t,) = enumerate_btableaux(0)
        stats = btableau_statistics(t)
        assert stats.ur == 0
        assert stats.sign == 1


class TestSymmetrize:
    def test_worked_example_doubles(self):
        sym = symmetrize(EIGHT)
        assert tableau_to_dict(sym.symmetric) == {
            "n": 16,
            "cols": [16, 14, 11, 10, 8, 5, 4, 2],
            "rows": [1, 3, 6, 7, 9, 12, 13, 15],
            "fill": [
                [0, 1, 0, 0, 1, 0, 0, 1],
                [1, 1, 0, 1, 1, 1, 0],
                [0, 0, 0, 0, 1],
                [0, 1, 0, 1, 1],
                [1, 1, 1, 1],
                [0, 1],
                [0, 0],
                [1],
            ],
        }
        assert sym.removed == frozenset({4, 13})
        assert tableau_to_dict(sym.core) == {
            "n": 14,
            "cols": [16, 14, 11, 10, 8, 5, 2],
            "rows": [1, 3, 6, 7, 9, 12, 15],
            "fill": [
                [0, 1, 0, 0, 1, 0, 1],
                [1, 1, 0, 1, 1, 1],
                [0, 0, 0, 0, 1],
                [0, 1, 0, 1, 1],
                [1, 1, 1, 1],
                [0, 1],
                [1],
            ],
        }

    def test_doubled_tableau_is_point_symmetric(self):
        # Cell (a, b) always matches cell (2n+1-b, 2n+1-a).
        for t in enumerate_btableaux(2):
            sym = symmetrize(t).symmetric
            labels = set(sym.shape.rows) | set(sym.shape.cols)
            assert labels == set(range(1, 5))
            for a in sym.shape.rows:
                for b in sym.shape.cols:
                    if a < b and (5 - b) < (5 - a):
                        assert sym.entry(a, b) == sym.entry(5 - b, 5 - a)

    def test_empty_tableau_doubles_to_empty(self):
        (t,) = enumerate_btableaux(0)
        sym = symmetrize(t)
        assert sym.symmetric == empty_tableau(0)
        assert sym.removed == frozenset()


class TestRouting:
    def test_worked_example_permutation(self):
        assert to_symmetric_perm(EIGHT) == SIXTEEN_PERM

    def test_worked_example_inverse(self):
        assert from_symmetric_perm(SIXTEEN_PERM) == EIGHT

    def test_round_trip_exhaustive(self):
        for n in range(4):
            for t in enumerate_btableaux(n):
                assert from_symmetric_perm(to_symmetric_perm(t)) == t

    def test_images_are_symmetric_and_distinct(self):
        from permtab import is_symmetric_perm

        images = {to_symmetric_perm(t) for t in enumerate_btableaux(3)}
        assert len(images) == 48
        assert all(is_symmetric_perm(p) for p in images)

    def test_identity_comes_from_the_empty_tableau(self):
        t = from_symmetric_perm((1, 2, 3, 4))
        assert t.shape.cols == ()
        assert t.fill == ((), ())

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError):
            from_symmetric_perm((2, 3, 1, 4))

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError):
            from_symmetric_perm((1, 2, 3))

    def test_unrestricted_matches_core_columns(self):
        for n in range(4):
            for t in enumerate_btableaux(n):
                core = symmetrize(t).core
                assert btableau_statistics(t).ur == statistics(core).urc


class TestWireFormat:
    def test_round_trip(self):
        for t in itertools.chain(enumerate_btableaux(2), [EIGHT]):
            assert btableau_from_dict(btableau_to_dict(t)) == t

    def test_strict_keys(self):
        d = btableau_to_dict(EIGHT)
        d["extra"] = 1
        with pytest.raises(ValueError):
            btableau_from_dict(d)
        del d["extra"]
        del d["k"]
        with pytest.raises(ValueError):
            btableau_from_dict(d)

    def test_inconsistent_rows_rejected(self):
        d = btableau_to_dict(EIGHT)
        d["k"] = 3
        with pytest.raises(ValueError):
            btableau_from_dict(d)
        d = btableau_to_dict(EIGHT)
        d["pos_rows"] = [1, 4, 5, 6]
        with pytest.raises(ValueError):
            btableau_from_dict(d)
