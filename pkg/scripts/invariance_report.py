"""Check the xor and cvt table laws for every class and print the cvt offsets.

    python scripts/invariance_report.py --n 4
"""

import argparse

from affclass.analysis import cvt_offset, cvt_offset_check, xor_invariance_check
from affclass.classifier import base_point, num_classes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    print(f"xor tables identical to class 1: {xor_invariance_check(n)}")
    print(f"cvt tables = class 1 + offset:   {cvt_offset_check(n)}")
    print(f"{'class':>5} {'base point':>10} {'cvt offset':>10}")
    for k in range(1, num_classes(n) + 1):
        print(f"{k:>5} {base_point(n, k).rule:>10} {cvt_offset(n, k):>10}")


if __name__ == "__main__":
    main()
