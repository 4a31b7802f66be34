#!/usr/bin/env python3
"""Run the desk-scale verification sweeps and conjecture probes end to end.

Theorem targets (crlodd, crleven, L15, bases) are exhaustive over their
stated domains and exit nonzero on any counterexample; odd2 and pi2 print
evidence tables only.
"""

import argparse
import json
import sys

from sumdiv.verify import (
    CONJECTURE_TARGETS,
    THEOREM_TARGETS,
    default_workers,
    run_target,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--targets", nargs="*",
        default=list(THEOREM_TARGETS + CONJECTURE_TARGETS),
        choices=THEOREM_TARGETS + CONJECTURE_TARGETS,
    )
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()
    workers = args.workers if args.workers is not None else default_workers()

    failed = False
    for name in args.targets:
        report = run_target(name, workers=workers)
        if args.json:
            print(json.dumps(report.to_dict(), sort_keys=True))
            failed = failed or report.status == "fail"
            continue
        print(f"== {name} ==")
        print(f"   range: {report.range}")
        print(f"   status: {report.status}  ({report.elapsed:.1f}s)")
        for c in report.counterexamples[:10]:
            print(f"   counterexample: {c}")
        if name == "odd2":
            for row in report.details["rows"]:
                locs = ", ".join(
                    loc["set"] for loc in row["second_locations"]
                )
                note = "" if row["covered_by_conjecture"] else "  (outside conjecture)"
                print(
                    f"   k={row['k']:2d}  second d={row['second_d']:4d} at "
                    f"n={row['predicted_n']} hit={row['predicted_hit']}"
                    f"{note}  [{locs}]"
                )
        if name == "pi2":
            for row in report.details["rows"]:
                print(
                    f"   k={row['k']:2d}  digits={row['digits']:2d}  "
                    f"irreducible={row['irreducible']:6d}  "
                    f"predicted={row['predicted']:6d}  "
                    f"ratio={row['ratio']:.3f}"
                )
        if report.status == "fail":
            failed = True
    return 3 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
