"""Partition of all n-variable Boolean functions into 2^(n+1) classes, one affine each.

Two functions are equivalent when they agree on the n+1 fixed positions
1, 1 + 2^(n-1), 1 + 2^(n-1) + 2^(n-2), ..., 2^n. Those positions are the inputs
0, 10..0, 110..0, ..., 11..1, and an affine function is pinned down by its values
there, which is why every class holds exactly one affine member.

Classes are numbered 1..2^(n+1): class m+1 holds the linear function with
coefficient mask m, and class k + 2^n holds the complements of class k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .config import CapExceeded, ValidationError, check_materialize
from .truthtable import (
    AffineSpec,
    TruthTable,
    _check_n,
    affine_truth_table,
    complement,
    concat_high_low,
    full_mask,
)


@dataclass(frozen=True)
class FixedPositions:
    n: int
    positions: tuple[int, ...]

    def __iter__(self):
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)


def fixed_positions(n: int) -> FixedPositions:
    _check_n(n, max_n=64)
    found = []
    x = 1 << n
    for i in range(n + 1):
        found.append(x)
        x = found[i] - (1 << i)
    return FixedPositions(n, tuple(sorted(found)))


def fixed_positions_formula(n: int) -> list[int]:
    """2^0, 2^0 + 2^(n-1), 2^0 + 2^(n-1) + 2^(n-2), ..., summed down to 2^0 again."""
    out = [1]
    acc = 1
    for e in range(n - 1, -1, -1):
        acc += 1 << e
        out.append(acc)
    return out


def changed_positions(n: int) -> list[int]:
    fixed = set(fixed_positions(n))
    return [p for p in range(1, (1 << n) + 1) if p not in fixed]


def changed_positions_formula(n: int) -> list[int]:
    """Union of the ranges [1 .. 2^(n-j) - 1] shifted by the j-th fixed position."""
    fixed = fixed_positions_formula(n)
    out = []
    for j in range(1, n + 1):
        base = fixed[j - 1]
        out.extend(base + d for d in range(1, 1 << (n - j)))
    return out


@lru_cache(maxsize=None)
def fixed_inputs(n: int) -> tuple[int, ...]:
    return tuple(p - 1 for p in fixed_positions(n))


@lru_cache(maxsize=None)
def fixed_mask(n: int) -> int:
    m = 0
    for x in fixed_inputs(n):
        m |= 1 << x
    return m


@lru_cache(maxsize=None)
def changed_mask(n: int) -> int:
    return full_mask(n) ^ fixed_mask(n)


def num_classes(n: int) -> int:
    return 1 << (n + 1)


def class_size_log2(n: int) -> int:
    return (1 << n) - (n + 1)


@dataclass(frozen=True)
class Signature:
    """Bits of a function at the fixed positions; bit j of ``value`` is the j-th smallest."""

    n: int
    value: int

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> j) & 1 for j in range(self.n + 1))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def signature(f: TruthTable) -> Signature:
    v = 0
    for j, x in enumerate(fixed_inputs(f.n)):
        v |= ((f.rule >> x) & 1) << j
    return Signature(f.n, v)


def equivalent(f: TruthTable, g: TruthTable) -> bool:
    if f.n != g.n:
        raise ValidationError(f"variable counts differ: {f.n} vs {g.n}")
    return signature(f) == signature(g)


def check_index(n: int, k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= num_classes(n):
        raise ValidationError(f"class index {k!r} outside [1, {num_classes(n)}] for n={n}")


def complement_partner(n: int, k: int) -> int:
    check_index(n, k)
    half = 1 << n
    return k + half if k <= half else k - half


def affine_spec_for_class(n: int, k: int) -> AffineSpec:
    check_index(n, k)
    half = 1 << n
    if k <= half:
        return AffineSpec(n, k - 1, 0)
    return AffineSpec(n, k - 1 - half, 1)


def affine_representative(n: int, k: int) -> TruthTable:
    spec = affine_spec_for_class(n, k)
    linear = affine_truth_table(AffineSpec(n, spec.mask, 0))
    return complement(linear) if spec.constant else linear


def classify(f: TruthTable) -> int:
    """Class index in O(n): read n+1 bits and undo the affine structure.

    Along the fixed inputs 0, 10..0, 110..0, ... each step sets one more variable,
    top variable first, so consecutive outputs differ exactly by that variable's
    coefficient.
    """
    n, r = f.n, f.rule
    xs = fixed_inputs(n)
    constant = r & 1
    mask = 0
    prev = constant
    for j in range(1, n + 1):
        cur = (r >> xs[j]) & 1
        mask |= (cur ^ prev) << (n - j)
        prev = cur
    return mask + 1 + (constant << n)


@lru_cache(maxsize=8)
def _affine_signature_table(n: int) -> tuple[int, ...]:
    return tuple(signature(affine_representative(n, k)).value for k in range(1, num_classes(n) + 1))


def classify_brute(f: TruthTable) -> int:
    """Reference classifier: match the signature against every affine function's."""
    if f.n > 16:
        raise CapExceeded("brute-force classification builds all 2^(n+1) affine tables; n <= 16")
    target = signature(f).value
    for k, sig in enumerate(_affine_signature_table(f.n), start=1):
        if sig == target:
            return k
    raise AssertionError("signature matched no affine function")


def base_point(n: int, k: int) -> TruthTable:
    """Member of class k that is zero on every changed position."""
    return TruthTable(n, affine_representative(n, k).rule & fixed_mask(n))


def _deposit(value: int, mask: int) -> int:
    """Scatter the low bits of ``value`` into the set bits of ``mask``, low to high."""
    out = 0
    while value and mask:
        low = mask & -mask
        if value & 1:
            out |= low
        value >>= 1
        mask ^= low
    return out


def class_member(n: int, k: int, j: int) -> TruthTable:
    """The j-th (0-based) member of class k in ascending rule order."""
    check_index(n, k)
    if not 0 <= j < (1 << class_size_log2(n)):
        raise ValidationError(f"member index {j} outside class of size 2^{class_size_log2(n)}")
    return TruthTable(n, base_point(n, k).rule | _deposit(j, changed_mask(n)))


def iter_member_rules(n: int, k: int, start: int = 0) -> Iterator[int]:
    """Ascending rule numbers of class k, beginning at member index ``start``."""
    check_index(n, k)
    base = base_point(n, k).rule
    cmask = changed_mask(n)
    if start >= (1 << class_size_log2(n)):
        return
    sub = _deposit(start, cmask)
    while True:
        yield base | sub
        if sub == cmask:
            return
        sub = (sub - cmask) & cmask


def class_members(n: int, k: int, limit: int | None = None, *, stream: bool = False,
                  max_n: int | None = None) -> Iterator[TruthTable]:
    """Members of class k, ascending by rule number.

    Without ``limit`` or ``stream`` the whole class is produced, which is only
    allowed up to the materialization cap.
    """
    check_index(n, k)
    if limit is None and not stream:
        check_materialize(n, max_n)
    for count, r in enumerate(iter_member_rules(n, k)):
        if limit is not None and count >= limit:
            return
        yield TruthTable(n, r)


def generator_pattern(n: int, k: int) -> str:
    """MSB-first pattern: signature bits at fixed positions, '-' elsewhere."""
    rep = affine_representative(n, k)
    fixed = set(fixed_inputs(n))
    chars = []
    for x in range(rep.size - 1, -1, -1):
        chars.append(str(rep(x)) if x in fixed else "-")
    return "".join(chars)


def expand_pattern(pattern: str) -> Iterator[TruthTable]:
    """Every truth table matching an MSB-first pattern over {0, 1, -}, ascending."""
    fixed_value = int(pattern.replace("-", "0"), 2)
    free = int("".join("1" if c == "-" else "0" for c in pattern), 2)
    n = len(pattern).bit_length() - 1
    sub = 0
    while True:
        yield TruthTable(n, fixed_value | sub)
        if sub == free:
            return
        sub = (sub - free) & free


@dataclass(frozen=True)
class ClassPartition:
    """Classes in canonical order: ``classes[k - 1]`` is class k."""

    n: int
    classes: tuple[frozenset[int], ...]
    method: str

    def __len__(self) -> int:
        return len(self.classes)

    def members(self, k: int) -> list[int]:
        return sorted(self.classes[k - 1])

    def as_set_family(self) -> frozenset[frozenset[int]]:
        return frozenset(self.classes)


def fixed_partition(n: int, max_n: int | None = None) -> ClassPartition:
    check_materialize(n, max_n)
    classes = [set() for _ in range(num_classes(n))]
    for r in range(1 << (1 << n)):
        classes[classify(TruthTable(n, r)) - 1].add(r)
    return ClassPartition(n, tuple(frozenset(c) for c in classes), "fixed-position")


def recursive_classes(n: int, max_n: int | None = None) -> list[list[int]]:
    """Classes in construction order, members in the order the product emits them.

    Start from [{00}, {10}, {11}, {01}]; each step pairs every class A (as the
    high half) with the flattened first half of the classes, then again with the
    flattened second half, as the low half.
    """
    _check_n(n)
    check_materialize(n, max_n)
    width = 1
    classes = [[0b00], [0b10], [0b11], [0b01]]
    for _ in range(n - 1):
        half = len(classes) // 2
        linear_side = [r for cls in classes[:half] for r in cls]
        complement_side = [r for cls in classes[half:] for r in cls]
        shift = 1 << width
        nxt = []
        for low_side in (linear_side, complement_side):
            for cls in classes:
                nxt.append([(a << shift) | b for a in cls for b in low_side])
        classes = nxt
        width += 1
    return classes


def recursive_partition(n: int, max_n: int | None = None) -> ClassPartition:
    """Recursive product construction, relabelled so class k holds affine_representative(k)."""
    raw = recursive_classes(n, max_n)
    affines = {affine_representative(n, k).rule: k for k in range(1, num_classes(n) + 1)}
    ordered: list[frozenset[int] | None] = [None] * num_classes(n)
    for cls in raw:
        hits = [affines[r] for r in cls if r in affines]
        if len(hits) != 1:
            raise AssertionError(f"constructed class holds {len(hits)} affine functions")
        ordered[hits[0] - 1] = frozenset(cls)
    return ClassPartition(n, tuple(ordered), "recursive")


def partition(n: int, method: str = "fixed", max_n: int | None = None) -> ClassPartition:
    if method in ("fixed", "fixed-position"):
        return fixed_partition(n, max_n)
    if method == "recursive":
        return recursive_partition(n, max_n)
    raise ValidationError(f"unknown partition method {method!r}")


def partitions_equal(p: ClassPartition, q: ClassPartition) -> bool:
    if p.n != q.n:
        raise ValidationError(f"partitions of different n: {p.n} vs {q.n}")
    return p.as_set_family() == q.as_set_family()
