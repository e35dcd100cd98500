"""Time the O(n) classifier against brute-force signature matching.

    python scripts/bench_classify.py --max-n 22 --reps 50
"""

import argparse
import random
import time

from affclass.classifier import classify, classify_brute
from affclass.truthtable import TruthTable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'fast (us)':>12} {'brute (us)':>12}")
    for n in range(2, args.max_n + 1):
        fs = [TruthTable(n, rng.getrandbits(1 << n)) for _ in range(args.reps)]
        t0 = time.perf_counter()
        fast = [classify(f) for f in fs]
        t1 = time.perf_counter()
        brute = "-"
        if n <= 10:
            assert fast == [classify_brute(f) for f in fs]
            brute = f"{(time.perf_counter() - t1) / args.reps * 1e6:12.1f}"
        print(f"{n:>3} {(t1 - t0) / args.reps * 1e6:12.1f} {brute:>12}")


if __name__ == "__main__":
    main()
