"""Detection counts of both criteria over Ginibre ensembles of varying rank.

    python scripts/ensemble_study.py --samples 500 --seed 0 --workers 4
"""

import argparse
import csv
import sys
from dataclasses import asdict
from pathlib import Path

from ccnr.cli import sample_ensemble

DIMS = [(2, 2), (2, 3), (3, 3)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "results" / "ensemble_study.csv")
    args = parser.parse_args()

    rows = []
    for da, db in DIMS:
        d = da * db
        for rank in sorted({1, 2, d // 2, d - 1, d}):
            s = sample_ensemble(da, db, rank, args.samples, args.seed, workers=args.workers)
            rows.append({"dimA": da, "dimB": db, "rank": rank, **asdict(s)})
            print(rows[-1], file=sys.stderr)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


if __name__ == "__main__":
    main()
