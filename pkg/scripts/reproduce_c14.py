"""Compare the closed form, the construction and the exact DP for C(n;{1,4}).

    python3 scripts/reproduce_c14.py --to 120 --csv c14.csv
"""
import argparse
import sys

from rainbowdom import harness


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="lo", type=int, default=9)
    ap.add_argument("--to", dest="hi", type=int, default=120)
    ap.add_argument("--csv", help="also write all rows here")
    args = ap.parse_args()

    rows = harness.verify_range("c14", args.lo, args.hi, ("formula", "construction", "dp"))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(harness.rows_to_csv(rows))
    bad = [r for r in rows if r.status != "agree"]
    print(f"{len(rows)} rows, {len(bad)} disagreeing")
    for r in bad:
        print(f"  n={r.n}: formula {r.formula}, construction {r.construction_weight}, dp {r.dp}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
