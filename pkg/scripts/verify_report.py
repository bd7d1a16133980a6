"""Run the full verification suite and print a one-line summary per check.

    python3 scripts/verify_report.py [--json report.json]
"""
import argparse
import json
import sys

from contcs.verify import run_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", default=None, help="also write the machine-readable report here")
    args = ap.parse_args()
    rep = run_checks()
    for c in rep.checks:
        print(f"{'ok  ' if c.passed else 'FAIL'} {c.module:8s} {c.check_name:34s} {c.observed:.3e} < {c.tolerance:.0e}")
    for k, v in rep.adjudications.items():
        print(f"  {k}: {v}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rep.as_dict(), fh, indent=1)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
