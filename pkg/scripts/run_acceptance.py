#!/usr/bin/env python3
"""Run the acceptance checks outside pytest and print one line per criterion.

    python3 scripts/run_acceptance.py            # all ten
    python3 scripts/run_acceptance.py 1 7 9      # a selection
    python3 scripts/run_acceptance.py --json out.json
"""

import argparse
import json
import sys

from vertexlab.acceptance import CRITERIA, run_criterion, status_line


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("numbers", nargs="*", type=int, help="criteria to run (default: all)")
    ap.add_argument("--json", metavar="PATH", help="also write every report as JSON")
    ap.add_argument("-v", "--verbose", action="store_true", help="print each sub-report")
    args = ap.parse_args()

    chosen = [c for c in CRITERIA if not args.numbers or c.number in args.numbers]
    dump, ok = {}, True
    for c in chosen:
        passed, reports, elapsed = run_criterion(c)
        ok &= passed
        print(status_line(c, passed, elapsed), flush=True)
        if args.verbose or not passed:
            for rep in reports:
                print("   ", rep)
        dump[c.number] = {"title": c.title, "passed": passed, "elapsed": round(elapsed, 2),
                          "reports": [r.to_dict() for r in reports]}
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2, sort_keys=True, default=str)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
