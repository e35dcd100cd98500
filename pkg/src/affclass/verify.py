"""Property and golden-data checks replayed by ``affclass verify``."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from . import golden
from .analysis import (
    cvt_offset_check,
    op_table,
    subclass_report,
    subclass_sizes,
    xor_invariance_check,
)
from .classifier import (
    affine_representative,
    changed_positions,
    changed_positions_formula,
    class_size_log2,
    classify,
    classify_brute,
    complement_partner,
    expand_pattern,
    fixed_partition,
    fixed_positions,
    fixed_positions_formula,
    generator_pattern,
    iter_member_rules,
    num_classes,
    partitions_equal,
    recursive_partition,
)
from .config import check_materialize
from .truthtable import (
    TruthTable,
    all_functions,
    complement,
    concat_self,
    concat_with_complement,
    concat_high_low,
    is_affine,
    is_linear,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  -- {self.detail}" if self.detail else "")


def _positions(n):
    fixed = list(fixed_positions(n))
    changed = changed_positions(n)
    ok = (fixed == fixed_positions_formula(n)
          and changed == sorted(changed_positions_formula(n))
          and len(fixed) == n + 1
          and sorted(fixed + changed) == list(range(1, (1 << n) + 1)))
    return ok, f"fixed={fixed}" if n <= 4 else ""


def _affine_census(n):
    aff = [f for f in all_functions(n) if is_affine(f)]
    lin = [f for f in aff if is_linear(f)]
    return len(aff) == 1 << (n + 1) and len(lin) == 1 << n, f"{len(aff)} affine, {len(lin)} linear"


def _concat_laws(n):
    bad = []
    for f in all_functions(n):
        g = complement(f)
        if is_linear(f) != (is_linear(concat_self(f)) and is_linear(concat_with_complement(f))):
            bad.append(("linear", f.rule))
        quad = [concat_high_low(a, b) for a in (f, g) for b in (f, g)]
        if is_affine(f) != all(is_affine(h) for h in quad):
            bad.append(("affine", f.rule))
    return not bad, f"mismatches: {bad[:5]}" if bad else f"{1 << (1 << n)} functions"


def _partition_shape(n):
    part = fixed_partition(n)
    size = 1 << class_size_log2(n)
    problems = []
    if len(part) != num_classes(n):
        problems.append("class count")
    if any(len(c) != size for c in part.classes):
        problems.append("class size")
    if sum(len(c) for c in part.classes) != 1 << (1 << n):
        problems.append("union")
    for k, cls in enumerate(part.classes, start=1):
        affines = [r for r in cls if is_affine(TruthTable(n, r))]
        if affines != [affine_representative(n, k).rule]:
            problems.append(f"class {k} affine members {affines}")
        parity = 0 if k <= 1 << n else 1
        if any(r & 1 != parity for r in cls):
            problems.append(f"class {k} parity")
    return not problems, "; ".join(problems[:5])


def _complement_pairing(n):
    bad = [f.rule for f in all_functions(n)
           if classify(complement(f)) != complement_partner(n, classify(f))]
    return not bad, f"mismatches at {bad[:5]}" if bad else ""


def _classify_vs_brute(n):
    bad = [f.rule for f in all_functions(n) if classify(f) != classify_brute(f)]
    return not bad, f"mismatches at {bad[:5]}" if bad else f"{1 << (1 << n)} functions"


def _recursive_vs_fixed(n):
    return partitions_equal(recursive_partition(n), fixed_partition(n)), ""


def _generators(n):
    for k in range(1, num_classes(n) + 1):
        expanded = [f.rule for f in expand_pattern(generator_pattern(n, k))]
        if expanded != list(iter_member_rules(n, k)):
            return False, f"class {k}"
    return True, f"{num_classes(n)} generators"


def _subclasses(n):
    want = subclass_sizes(n)
    m = class_size_log2(n)
    if want != [comb(m, d) for d in range(m + 1)]:
        return False, "binomial list"
    for k in range(1, num_classes(n) + 1):
        got = list(subclass_report(n, k).sizes.values())
        if got != want:
            return False, f"class {k}: {got}"
    return True, ",".join(map(str, want)) if n <= 3 else ""


def _golden_classes():
    problems = []
    for k, subclasses in golden.CLASS_LISTING.items():
        report = subclass_report(3, k)
        if report.affine != golden.AFFINE_ORDER[k - 1]:
            problems.append(f"class {k} affine {report.affine}")
        for d, printed in subclasses:
            if sorted(printed) != report.rows[d]:
                problems.append(f"class {k} hd {d}: printed {sorted(printed)} computed {report.rows[d]}")
        for d, printed in subclasses:
            for r in printed:
                if classify(TruthTable(3, r)) != k:
                    problems.append(f"{r} classified outside class {k}")
    return not problems, "; ".join(problems[:5]) or "16 classes, 256 functions"


def _golden_tables():
    problems = []
    sources = list(golden.TABLES.items()) + list(golden.SUMMARY_TABLES.items())
    for (op, k), text in sources:
        op_name, axis, rows = golden.parse_table(text)
        table = op_table(3, k, op)
        if op_name != op or axis != table.axis.tolist():
            problems.append(f"{op} class {k} axis")
            continue
        printed = np.array([rows[a] for a in axis], dtype=np.int64)
        diff = np.argwhere(printed != table.cells)
        if len(diff):
            i, j = diff[0]
            problems.append(f"{op} class {k} cell ({axis[i]},{axis[j]}): "
                            f"printed {printed[i, j]} computed {table.cells[i, j]}")
    return not problems, "; ".join(problems) or f"{len(sources)} tables"


def _golden_checksum():
    return golden.checksum() == golden.CHECKSUM, ""


def run_checks(n: int, use_golden: bool = False, max_n: int | None = None) -> list[CheckResult]:
    check_materialize(n, max_n)
    suite: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("fixed/changed positions", lambda: _positions(n)),
        ("affine census", lambda: _affine_census(n)),
        ("partition shape", lambda: _partition_shape(n)),
        ("complement pairing", lambda: _complement_pairing(n)),
        ("classify vs brute force", lambda: _classify_vs_brute(n)),
        ("recursive == fixed-position partition", lambda: _recursive_vs_fixed(n)),
        ("generator expansion", lambda: _generators(n)),
        ("sub-class binomials", lambda: _subclasses(n)),
        ("xor invariance", lambda: (xor_invariance_check(n, max_n), "")),
        ("cvt offset law", lambda: (cvt_offset_check(n, max_n), "")),
    ]
    if n <= 3:
        suite.insert(2, ("concatenation laws", lambda: _concat_laws(n)))
    if use_golden and n == 3:
        suite += [
            ("golden checksum", _golden_checksum),
            ("golden class listing", _golden_classes),
            ("golden operation tables", _golden_tables),
        ]
    results = []
    for name, fn in suite:
        ok, detail = fn()
        results.append(CheckResult(name, bool(ok), detail))
    return results
