"""Beta distribution over all optimal 2RDFs of C(n;{1,4}) for small n."""
import argparse
import json

from rainbowdom import harness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ns", nargs="*", type=int, default=[9, 10, 11, 12, 13, 14])
    args = ap.parse_args()
    for n in args.ns:
        r = harness.beta_report(n)
        mark = "ok" if harness.beta_report_ok(r) else "VIOLATED"
        print(f"n={n:3d} opt={r['optimum']} formula={r['formula']} optima={r['optima_count']} "
              f"beta={json.dumps(r['beta_histogram'])} need>={r['required_min_beta']} {mark}")


if __name__ == "__main__":
    main()
