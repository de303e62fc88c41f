"""Cross-check the outerplanar DP against the exhaustive oracle on random MOPs."""

import argparse
import time

from mccolor import exact_mcc, gen_random_mop, solve_mcc2


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=300)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    span = args.max_n - args.min_n + 1
    start = time.perf_counter()
    mismatches = 0
    for i in range(args.count):
        n = args.min_n + i % span
        g = gen_random_mop(n, args.seed + i)
        dp, ora = solve_mcc2(g).value, exact_mcc(g, 2).value
        if dp != ora:
            mismatches += 1
            print(f"mismatch: n={n} seed={args.seed + i} dp={dp} oracle={ora}")
    print(f"{args.count} graphs, {mismatches} mismatches, {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
