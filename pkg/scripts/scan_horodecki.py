"""Scan the 3x3 Horodecki family and archive where the realignment test fires.

    python scripts/scan_horodecki.py --steps 101 --out results/
"""

import argparse
import io
from contextlib import redirect_stdout
from pathlib import Path

from ccnr import cli


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=101)
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "results")
    args = parser.parse_args()

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(["family", "horodecki3x3", "0", "1", str(args.steps), "--tol", str(args.tol)])
    if code:
        raise SystemExit(code)
    csv = buf.getvalue()

    rows = [line.split(",") for line in csv.strip().splitlines()[1:]]
    window = [float(r[1]) for r in rows if r[4] == "1"]
    ppt_hits = sum(r[5] == "1" for r in rows)
    best = max(rows, key=lambda r: float(r[2]))

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "horodecki3x3_scan.csv").write_text(csv)
    summary = (
        f"grid: {len(rows)} points on [0, 1], tol={args.tol:g}\n"
        f"ppt detections: {ppt_hits}\n"
        f"ccnr detections: {len(window)}\n"
        f"ccnr window: [{min(window):g}, {max(window):g}]\n"
        f"largest ccnr value: {best[2]} at a={best[1]}\n"
    )
    (args.out / "horodecki3x3_window.txt").write_text(summary)
    print(summary, end="")


if __name__ == "__main__":
    main()
