#!/usr/bin/env python3
"""Write the image-domain boundary curve (and optional inner circles) as CSV.

Usage:
    python scripts/export_boundary.py out/boundary.csv [--samples 4096]
                                      [--radius 1.0]
"""

import argparse
import pathlib

from secstar.generator import sample_circle


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("out", type=pathlib.Path)
    ap.add_argument("--samples", type=int, default=4096)
    ap.add_argument("--radius", type=float, default=1.0)
    args = ap.parse_args()
    sample = sample_circle(args.radius, args.samples)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(sample.to_csv())
    print(f"wrote {args.out} ({sample.count} rows, radius {sample.radius})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
