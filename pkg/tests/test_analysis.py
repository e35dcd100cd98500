from dataclasses import replace
from itertools import combinations

import numpy as np
import pytest

from affclass.analysis import (
    class_axis,
    cvt_offset,
    cvt_offset_check,
    cvt_table_matches,
    in_class_one,
    op_table,
    op_table_tiles,
    subclass_report,
    subclass_sizes,
    xor_invariance_check,
    xor_table_matches,
)
from affclass.classifier import base_point, classify, iter_member_rules
from affclass.config import CapExceeded, ValidationError
from affclass.truthtable import TruthTable, is_affine


def hd_groups_by_brute_force(n, k):
    """Group the functions of class k (found by classifying everything) by distance."""
    members = [r for r in range(2 ** (2 ** n)) if classify(TruthTable(n, r)) == k]
    aff = [r for r in members if is_affine(TruthTable(n, r))]
    assert len(aff) == 1
    groups = {}
    for r in members:
        groups.setdefault(bin(r ^ aff[0]).count("1"), []).append(r)
    return groups


class TestSubclasses:
    def test_class_1_n3(self):
        rep = subclass_report(3, 1)
        assert rep.sizes == {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}
        assert set(rep.rows[1]) == {2, 32, 8, 4}
        assert set(rep.rows[2]) == {34, 10, 40, 12, 6, 36}
        assert rep.rows[4] == [46]

    def test_class_9_n3(self):
        assert set(subclass_report(3, 9).rows[1]) == {253, 223, 247, 251}

    def test_class_1_n2(self):
        rep = subclass_report(2, 1)
        assert rep.sizes == {0: 1, 1: 1}
        assert rep.sizes == {d: len(v) for d, v in hd_groups_by_brute_force(2, 1).items()}

    def test_sizes(self):
        assert subclass_sizes(3) == [1, 4, 6, 4, 1]
        assert subclass_sizes(1) == [1]
        assert subclass_sizes(4)[:3] == [1, 11, 55]
        assert len(subclass_sizes(4)) == 12

    @pytest.mark.parametrize("k", [1, 20])
    def test_n4_binomials_by_brute_force(self, k):
        groups = hd_groups_by_brute_force(4, k)
        assert [len(groups[d]) for d in sorted(groups)] == subclass_sizes(4)
        rep = subclass_report(4, k)
        assert rep.rows == {d: sorted(v) for d, v in sorted(groups.items())}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_rows_partition_class(self, n):
        for k in (1, 2 ** n, 2 ** (n + 1)):
            rep = subclass_report(n, k)
            flat = sorted(r for rows in rep.rows.values() for r in rows)
            assert flat == list(iter_member_rules(n, k))
            sizes = list(rep.sizes.values())
            assert sizes == sizes[::-1] == subclass_sizes(n)
            assert all(rows == sorted(rows) for rows in rep.rows.values())

    def test_cap(self):
        with pytest.raises(CapExceeded):
            subclass_report(5, 1)
        assert subclass_report(4, 1, max_n=4).sizes[1] == 11


class TestOpTables:
    def test_xor_cell(self):
        assert op_table(3, 1, "xor").cell(44, 34) == 14

    def test_cvt_cells(self):
        assert op_table(3, 2, "cvt").cell(130, 132) == 256
        t = op_table(3, 1, "cvt")
        assert t.cells[0].tolist() == [0] * 16

    def test_cell_rejects_non_member(self):
        with pytest.raises(ValidationError):
            op_table(3, 1, "xor").cell(1, 0)

    def test_unknown_op(self):
        with pytest.raises(ValidationError):
            op_table(3, 1, "and")

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_table_shape_and_symmetry(self, n):
        for op in ("xor", "cvt"):
            t = op_table(n, 3, op)
            m = 2 ** (2 ** n - (n + 1))
            assert t.cells.shape == (m, m)
            assert np.array_equal(t.cells, t.cells.T)
        x = op_table(n, 3, "xor")
        assert not np.diag(x.cells).any()
        assert in_class_one(n, x.cells)

    def test_cells_recomputable_from_axis(self):
        t = op_table(3, 11, "cvt")
        for i, a in enumerate(t.axis.tolist()):
            for j, b in enumerate(t.axis.tolist()):
                assert t.cells[i, j] == 2 * (a & b)

    def test_tiles_cover_table(self):
        full = op_table(4, 5, "cvt")
        blocks = list(op_table_tiles(4, 5, "cvt", rows_per_tile=300))
        assert len(blocks) == 7
        assert np.array_equal(np.vstack([b for _, b in blocks]), full.cells)
        assert np.array_equal(np.concatenate([r for r, _ in blocks]), full.axis)

    def test_numpy_limit(self):
        with pytest.raises(CapExceeded):
            class_axis(6, 1)


class TestInvariance:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_xor(self, n):
        assert xor_invariance_check(n)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_cvt(self, n):
        assert cvt_offset_check(n)

    def test_offsets(self):
        assert cvt_offset(3, 1) == 0
        assert cvt_offset(3, 2) == 256
        assert cvt_offset(3, 3) == 384

    def test_class_3_cvt_regenerated(self):
        t = op_table(3, 3, "cvt")
        assert t.cell(192, 192) == (192 & 192) * 2 == 384

    def test_mutated_xor_table_fails(self):
        ref = op_table(3, 1, "xor")
        other = op_table(3, 2, "xor")
        assert xor_table_matches(ref, other)
        cells = other.cells.copy()
        cells[3, 5] ^= 2
        assert not xor_table_matches(ref, replace(other, cells=cells))
        cells = other.cells.copy()
        cells[3, 5] |= 1  # leaves class 1
        assert not in_class_one(3, cells)

    def test_mutated_cvt_table_fails(self):
        ref = op_table(3, 1, "cvt")
        other = op_table(3, 2, "cvt")
        assert cvt_table_matches(ref, other, 256)
        assert not cvt_table_matches(ref, other, 128)
        cells = other.cells.copy()
        cells[0, 0] += 4
        assert not cvt_table_matches(ref, replace(other, cells=cells), 256)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_classes_are_translates_of_class_1(self, n):
        one = list(iter_member_rules(n, 1))
        for k in range(1, 2 ** (n + 1) + 1):
            bp = base_point(n, k).rule
            assert list(iter_member_rules(n, k)) == [r + bp for r in one]

    def test_same_class_xor_lands_in_class_1(self):
        for k in (5, 12):
            members = list(iter_member_rules(3, k))
            for a, b in combinations(members, 2):
                assert classify(TruthTable(3, a ^ b)) == 1
