"""Print every class of n-variable functions with its distance sub-classes.

    python scripts/class_listing.py --n 3
"""

import argparse

from affclass.analysis import subclass_report
from affclass.classifier import fixed_positions, generator_pattern, num_classes
from affclass.truthtable import TruthTable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    print(f"n={n}: fixed positions {list(fixed_positions(n))}")
    for k in range(1, num_classes(n) + 1):
        rep = subclass_report(n, k)
        print(f"\nclass {k}  pattern {generator_pattern(n, k)}  affine {rep.affine}")
        for d, rows in rep.rows.items():
            for i, r in enumerate(rows):
                tag = f"hd {d} ({len(rows)})" if i == 0 else ""
                print(f"  {TruthTable(n, r).to_bits()}  {r:>6}  {tag}")


if __name__ == "__main__":
    main()
