"""Hamming-distance sub-classes and the XOR / CVT operation tables of a class."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

import numpy as np

from .classifier import (
    affine_representative,
    base_point,
    check_index,
    class_size_log2,
    classify,
    fixed_mask,
    iter_member_rules,
    num_classes,
)
from .config import CapExceeded, ValidationError, check_materialize
from .truthtable import TruthTable

OPS = ("xor", "cvt")

# rule numbers must fit int64 after the CVT shift
_NUMPY_MAX_N = 5


@dataclass(frozen=True)
class SubclassReport:
    n: int
    k: int
    affine: int
    rows: dict[int, list[int]] = field(default_factory=dict)

    @property
    def sizes(self) -> dict[int, int]:
        return {d: len(v) for d, v in self.rows.items()}


def subclass_sizes(n: int) -> list[int]:
    m = class_size_log2(n)
    return [comb(m, d) for d in range(m + 1)]


def subclass_report(n: int, k: int, max_n: int | None = None) -> SubclassReport:
    check_index(n, k)
    check_materialize(n, max_n)
    aff = affine_representative(n, k).rule
    rows: dict[int, list[int]] = {d: [] for d in range(class_size_log2(n) + 1)}
    for r in iter_member_rules(n, k):
        rows[(r ^ aff).bit_count()].append(r)
    return SubclassReport(n, k, aff, rows)


@dataclass(frozen=True)
class OpTable:
    """``cells[i, j] = op(axis[i], axis[j])`` over the ascending members of class k."""

    n: int
    k: int
    op: str
    axis: np.ndarray
    cells: np.ndarray

    def cell(self, row_rule: int, col_rule: int) -> int:
        i = int(np.searchsorted(self.axis, row_rule))
        j = int(np.searchsorted(self.axis, col_rule))
        if self.axis[i] != row_rule or self.axis[j] != col_rule:
            raise ValidationError(f"{row_rule} or {col_rule} is not a member of class {self.k}")
        return int(self.cells[i, j])

    def __eq__(self, other):
        if not isinstance(other, OpTable):
            return NotImplemented
        return (self.n, self.k, self.op) == (other.n, other.k, other.op) and \
            np.array_equal(self.axis, other.axis) and np.array_equal(self.cells, other.cells)

    __hash__ = None


def _apply(op: str, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    if op == "xor":
        return rows[:, None] ^ cols[None, :]
    if op == "cvt":
        return (rows[:, None] & cols[None, :]) << 1
    raise ValidationError(f"unknown operation {op!r}; expected one of {OPS}")


def class_axis(n: int, k: int) -> np.ndarray:
    if n > _NUMPY_MAX_N:
        raise CapExceeded(f"operation tables are limited to n <= {_NUMPY_MAX_N}")
    return np.fromiter(iter_member_rules(n, k), dtype=np.int64, count=1 << class_size_log2(n))


def op_table(n: int, k: int, op: str, max_n: int | None = None) -> OpTable:
    check_index(n, k)
    check_materialize(n, max_n)
    axis = class_axis(n, k)
    return OpTable(n, k, op, axis, _apply(op, axis, axis))


def op_table_tiles(n: int, k: int, op: str, rows_per_tile: int = 256
                   ) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (row labels, row block) pairs so large tables never sit in memory whole."""
    check_index(n, k)
    if op not in OPS:
        raise ValidationError(f"unknown operation {op!r}; expected one of {OPS}")
    axis = class_axis(n, k)
    for start in range(0, len(axis), rows_per_tile):
        rows = axis[start:start + rows_per_tile]
        yield rows, _apply(op, rows, axis)


def in_class_one(n: int, values: np.ndarray) -> bool:
    """Class 1 is exactly the set of functions that vanish on every fixed position."""
    return bool(np.all((values & fixed_mask(n)) == 0))


def xor_table_matches(reference: OpTable, table: OpTable) -> bool:
    return np.array_equal(reference.cells, table.cells) and in_class_one(table.n, table.cells)


def cvt_offset(n: int, k: int) -> int:
    return 2 * base_point(n, k).rule


def cvt_table_matches(reference: OpTable, table: OpTable, offset: int) -> bool:
    return np.array_equal(reference.cells + offset, table.cells)


def xor_invariance_check(n: int, max_n: int | None = None) -> bool:
    ref = op_table(n, 1, "xor", max_n)
    if not in_class_one(n, ref.cells):
        return False
    for k in range(1, num_classes(n) + 1):
        table = op_table(n, k, "xor", max_n)
        if not xor_table_matches(ref, table):
            return False
        # spot-check through the classifier itself on the first row
        a = int(table.axis[0])
        if any(classify(TruthTable(n, a ^ int(b))) != 1 for b in table.axis):
            return False
    return True


def cvt_offset_check(n: int, max_n: int | None = None) -> bool:
    ref = op_table(n, 1, "cvt", max_n)
    for k in range(1, num_classes(n) + 1):
        if not cvt_table_matches(ref, op_table(n, k, "cvt", max_n), cvt_offset(n, k)):
            return False
    return True
