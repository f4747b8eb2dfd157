"""Solve P(10,2) exactly and say which published value it matches."""
import argparse
import json
import sys

from rainbowdom import harness
from rainbowdom.solvers import SearchLimits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-seconds", type=float, default=1800)
    args = ap.parse_args()
    rep = harness.adjudicate_p10_2(SearchLimits(max_seconds=args.max_seconds))
    print(json.dumps(rep, indent=2))
    return 0 if rep["exact"] else 1


if __name__ == "__main__":
    sys.exit(main())
