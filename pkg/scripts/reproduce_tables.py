#!/usr/bin/env python3
"""Regenerate the reference tables and the worked arithmetic examples.

Prints the F(n, k) rectangle, the headstrong triangle, the interval divisor
counts with their two table cross-readings, and the lunar worked examples.
Optionally writes the tables as CSV.
"""

import argparse
import pathlib

from sumdiv import (
    LunarNumber,
    divisor_count,
    f_table,
    fib_general,
    h_table,
    headstrong_count,
    interval,
    lunar_add,
    lunar_mul,
)
from sumdiv.cli import format_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=10)
    parser.add_argument("--cols", type=int, default=10)
    parser.add_argument(
        "--csv-dir", type=pathlib.Path, default=None,
        help="also write f_table.csv and h_table.csv here",
    )
    args = parser.parse_args()

    ftab = f_table(args.rows, args.cols)
    htab = h_table(args.rows)

    print(f"F(n, k) for n <= {args.rows}, k <= {args.cols}:")
    print(format_table(ftab, "plain"))
    print()
    print(f"Headstrong triangle H(n, m), rows 1..{args.rows}:")
    print(format_table(htab, "plain"))
    print()

    print("k, d([k]), F column sum, H row sum:")
    for k in range(args.cols):
        d = divisor_count(interval(k))
        col = sum(fib_general(n, k + 1) for n in range(1, k + 2))
        row = headstrong_count(k + 1)
        marker = "" if d == col == row else "  <-- MISMATCH"
        print(f"  {k:2d}  {d:6d}  {col:6d}  {row:6d}{marker}")
    print()

    x = LunarNumber.parse("169@10")
    y = LunarNumber.parse("248@10")
    print(f"{x} + {y} = {lunar_add(x, y)} (digitwise max)")
    print(f"{x} * {y} = {lunar_mul(x, y)} (carry-free min/max)")
    b1 = LunarNumber.parse("101@2")
    b2 = LunarNumber.parse("10110@2")
    print(f"{b1} * {b2} = {lunar_mul(b1, b2)}")

    if args.csv_dir is not None:
        args.csv_dir.mkdir(parents=True, exist_ok=True)
        (args.csv_dir / "f_table.csv").write_text(
            format_table(ftab, "csv") + "\n"
        )
        (args.csv_dir / "h_table.csv").write_text(
            format_table(htab, "csv") + "\n"
        )
        print(f"\nwrote CSV tables to {args.csv_dir}")


if __name__ == "__main__":
    main()
