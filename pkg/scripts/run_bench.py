"""Sweep every scheme over its family and print the growth fits.

    python3 scripts/run_bench.py --out-dir results
"""

import argparse
from pathlib import Path

from mccolor.bench import fit_records, records_to_csv, run_bench

SWEEPS = [
    # (family, algorithm, values, seeds, x axis)
    ("wheel", "wheel2", [10**2, 10**3, 10**4, 10**5], 1, "n"),
    ("snowflake", "snowflake2", list(range(2, 11)), 1, "delta"),
    ("outerpath", "outerpath2", [16, 36, 64, 100, 196], 20, "delta"),
    ("complete-3tree", "tree3-3col", list(range(2, 13)), 1, "n"),
    ("complete-3tree", "tree3-2col", list(range(6, 14)), 1, "n"),
]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", default="results")
    args = p.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for family, algo, values, seeds, axis in SWEEPS:
        records = run_bench(family, values, algo, seeds=range(seeds))
        (out / f"{algo}.csv").write_text(records_to_csv(records))
        fit = fit_records(records, axis)
        secs = sum(r.wall_time for r in records)
        print(f"{algo:12s} slope vs log {axis:5s} = {fit.slope:.3f}  (rms {fit.residual:.3f}, {secs:.1f}s)")


if __name__ == "__main__":
    main()
