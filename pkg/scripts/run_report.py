#!/usr/bin/env python3
"""Print the discrepancy report as an aligned text table.

Usage:
    python scripts/run_report.py [--samples 2000] [--seed 0xC0FFEE]

Exit code 3 when any row deviates from its expected status.
"""

import argparse

from secstar.report import discrepancy_report, report_ok


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=0xC0FFEE)
    args = ap.parse_args()
    rows = discrepancy_report(search_count=args.samples, seed=args.seed)
    name_w = max(len(r.constant_name) for r in rows)
    print(f"{'constant':<{name_w}}  {'published':>14}  {'computed':>14}  "
          f"{'abs diff':>10}  status")
    for r in rows:
        mark = "" if r.status == r.expected_status else "  <-- UNEXPECTED"
        print(f"{r.constant_name:<{name_w}}  {r.paper_value:>14.8g}  "
              f"{r.computed_value:>14.8g}  {r.abs_diff:>10.3g}  {r.status}{mark}")
    deviating = [r for r in rows if r.status != r.expected_status]
    print(f"\n{len(rows)} rows, {len(deviating)} deviating from the expected "
          f"reconstruction pattern")
    return 0 if report_ok(rows) else 3


if __name__ == "__main__":
    raise SystemExit(main())
