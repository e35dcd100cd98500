"""Exit criteria. Each test prints one PASS/FAIL line; run with ``-s`` to see them inline.

Every check here is exact (zero tolerance) except the two wall-clock bounds in
criterion 9.
"""

import random
import time
from math import comb

import numpy as np

from affclass import golden
from affclass.analysis import (
    cvt_offset,
    cvt_offset_check,
    op_table,
    subclass_report,
    subclass_sizes,
    xor_invariance_check,
)
from affclass.classifier import (
    affine_representative,
    changed_positions,
    changed_positions_formula,
    class_members,
    classify,
    classify_brute,
    complement_partner,
    fixed_partition,
    fixed_positions,
    fixed_positions_formula,
    partitions_equal,
    recursive_classes,
    recursive_partition,
)
from affclass.truthtable import (
    TruthTable,
    all_functions,
    complement,
    concat_high_low,
    concat_self,
    concat_with_complement,
    from_hex,
    is_affine,
    is_linear,
)

CLASSIFY_N20_SECONDS = 1.0
STREAM_1E6_SECONDS = 10.0
RANDOM_SAMPLES = 100_000


def report(criterion, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'}  criterion {criterion}" + (f": {detail}" if detail else ""))
    assert ok, detail


def pseudocode(n):
    b, x = [], 2 ** n
    for i in range(n + 1):
        b.append(x)
        x = b[-1] - 2 ** i
    return sorted(b)


def test_1_class_listing():
    problems = []
    affines = [affine_representative(3, k).rule for k in range(1, 17)]
    if affines != [0, 170, 204, 102, 240, 90, 60, 150, 255, 85, 51, 153, 15, 165, 195, 105]:
        problems.append(f"affines {affines}")
    if tuple(affines) != golden.AFFINE_ORDER:
        problems.append("affine order differs from listing")
    computed = {}
    for f in all_functions(3):
        computed.setdefault(classify(f), []).append(f.rule)
    for k, subclasses in golden.CLASS_LISTING.items():
        printed = sorted(r for _, rs in subclasses for r in rs)
        if printed != computed[k]:
            problems.append(f"class {k} membership")
        aff = affines[k - 1]
        for d, rs in subclasses:
            for r in rs:
                if (r ^ aff).bit_count() != d:
                    problems.append(f"class {k}: hd({r}) != {d}")
    report(1, not problems and golden.checksum() == golden.CHECKSUM,
           "; ".join(problems) or "16 classes x 16 members, affines and HD annotations exact")


def test_2_operation_tables():
    checked, problems = 0, []
    cases = [(golden.SUMMARY_TABLES, key) for key in golden.SUMMARY_TABLES] + \
            [(golden.TABLES, key) for key in golden.TABLES]
    for source, (op, k) in cases:
        name, axis, rows = golden.parse_table(source[(op, k)])
        table = op_table(3, k, op)
        printed = np.array([rows[a] for a in axis], dtype=np.int64)
        if name != op or axis != table.axis.tolist() or printed.shape != (16, 16) \
                or not np.array_equal(printed, table.cells):
            problems.append(f"{op} class {k}")
        checked += printed.size
    report(2, not problems and len(cases) == 7, "; ".join(problems) or f"{checked} cells exact")


def test_3_cross_method_equivalence():
    ok = all(partitions_equal(recursive_partition(n), fixed_partition(n)) for n in (2, 3, 4))
    verbatim = recursive_classes(2) == [[0, 2], [8, 10], [12, 14], [4, 6], [3, 1], [11, 9], [15, 13], [7, 5]]
    report(3, ok and verbatim, "n=2,3,4 partitions equal; n=2 construction verbatim")


def test_4_partition_structure():
    problems = []
    for n in range(1, 5):
        part = fixed_partition(n)
        size = 2 ** (2 ** n - (n + 1))
        if len(part) != 2 ** (n + 1):
            problems.append(f"n={n} class count")
        if any(len(c) != size for c in part.classes):
            problems.append(f"n={n} class size")
        if len(set().union(*part.classes)) != 2 ** (2 ** n):
            problems.append(f"n={n} union")
        for k in range(1, len(part) + 1):
            members = part.classes[k - 1]
            if any((r % 2 == 0) != (k <= 2 ** n) for r in members):
                problems.append(f"n={n} class {k} parity")
            if sum(is_affine(TruthTable(n, r)) for r in members) != 1:
                problems.append(f"n={n} class {k} affine count")
        fixed = list(fixed_positions(n))
        if not (fixed == pseudocode(n) == fixed_positions_formula(n)):
            problems.append(f"n={n} fixed positions")
        changed = changed_positions(n)
        if changed != sorted(changed_positions_formula(n)) or len(changed) != 2 ** n - (n + 1):
            problems.append(f"n={n} changed positions")
        for f in all_functions(n):
            if classify(complement(f)) != complement_partner(n, classify(f)):
                problems.append(f"n={n} complement rule at {f.rule}")
                break
    report(4, not problems, "; ".join(problems) or "n=1..4 exhaustive")


def test_5_concatenation_laws():
    checks, bad = 0, []
    for n in (1, 2, 3):
        for f in all_functions(n):
            g = complement(f)
            if is_linear(f) != (is_linear(concat_self(f)) and is_linear(concat_with_complement(f))):
                bad.append(("linear", n, f.rule))
            quad = [concat_high_low(a, b) for a in (f, g) for b in (f, g)]
            if is_affine(f) != all(is_affine(h) for h in quad):
                bad.append(("affine", n, f.rule))
            checks += 1
    report(5, not bad and checks == 4 + 16 + 256, f"{checks} functions per law" if not bad else str(bad[:5]))


def test_6_subclass_binomials():
    problems = []
    for k in range(1, 17):
        rep = subclass_report(3, k)
        if list(rep.sizes.values()) != [1, 4, 6, 4, 1]:
            problems.append(f"n=3 class {k} sizes")
        for d, printed in golden.CLASS_LISTING[k]:
            if set(printed) != set(rep.rows[d]):
                problems.append(f"n=3 class {k} hd {d}")
    want = [comb(11, d) for d in range(12)]
    if subclass_sizes(4) != want:
        problems.append("n=4 binomial list")
    for k in (1, 2, 17, 32):
        aff = affine_representative(4, k).rule
        groups = [0] * 12
        for r in range(2 ** 16):
            if classify(TruthTable(4, r)) == k:
                groups[(r ^ aff).bit_count()] += 1
        if groups != want:
            problems.append(f"n=4 class {k}: {groups}")
    report(6, not problems, "; ".join(problems) or "n=3 (1,4,6,4,1) with listed sets; n=4 C(11,d) over 4 classes")


def test_7_invariance_laws():
    ok = all(xor_invariance_check(n) and cvt_offset_check(n) for n in (2, 3, 4))
    _, axis, rows = golden.parse_table(golden.CVT_CLASS_2)
    _, axis1, rows1 = golden.parse_table(golden.CVT_CLASS_1)
    printed_offset = {rows[a][j] - rows1[b][j] for a, b in zip(axis, axis1) for j in range(16)}
    ok = ok and cvt_offset(3, 2) == 256 and printed_offset == {256}
    report(7, ok, "xor and cvt laws for n=2,3,4; n=3 class 2 offset 256")


def test_8_fast_classify_matches_brute_force():
    mismatches = 0
    for n in range(1, 5):
        mismatches += sum(classify(f) != classify_brute(f) for f in all_functions(n))
    rng = random.Random(20240501)
    for n in (5, 6):
        for _ in range(RANDOM_SAMPLES):
            f = from_hex(format(rng.getrandbits(2 ** n), f"0{2 ** n // 4}x"))
            assert f.n == n
            if classify(f) != classify_brute(f):
                mismatches += 1
    report(8, mismatches == 0, f"{mismatches} mismatches; exhaustive n<=4, {RANDOM_SAMPLES} random for n=5,6")


def test_9_performance():
    rng = random.Random(9)
    n = 20
    text = format(rng.getrandbits(2 ** n), f"0{2 ** n // 4}x")
    start = time.perf_counter()
    k = classify(from_hex(text))
    classify_time = time.perf_counter() - start
    assert 1 <= k <= 2 ** 21

    start = time.perf_counter()
    count = 0
    last = -1
    for f in class_members(5, 37, limit=10 ** 6, stream=True):
        assert f.rule > last
        last = f.rule
        count += 1
    stream_time = time.perf_counter() - start
    assert classify(TruthTable(5, last)) == 37
    report(9, classify_time < CLASSIFY_N20_SECONDS and count == 10 ** 6 and stream_time < STREAM_1E6_SECONDS,
           f"n=20 classify {classify_time * 1000:.1f} ms; 10^6 members streamed in {stream_time:.2f} s")
