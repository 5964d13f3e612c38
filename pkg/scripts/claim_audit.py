#!/usr/bin/env python3
"""Run the counterexample audit at every supported prime and print the
claim-by-claim report.

Usage: python3 scripts/claim_audit.py [--json]
"""

import argparse
import json

from repgeo.audit import SUPPORTED_PRIMES, paper_demo, render_report, report_jsonable


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    for p in SUPPORTED_PRIMES:
        report = paper_demo(p)
        if args.json:
            print(json.dumps(report_jsonable(report), indent=2, sort_keys=True))
        else:
            print(f"=== p = {p} ===")
            print(render_report(report))
            print()


if __name__ == "__main__":
    main()
