"""Recompute every worked example and print the golden report.

    python scripts/reproduce_examples.py [--json]
"""
import argparse
import sys

from ratcuboid.cli import golden_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    r = golden_report()
    print(r.to_json() if args.json else r.to_text())
    return r.exit_code


if __name__ == "__main__":
    sys.exit(main())
