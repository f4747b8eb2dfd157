"""Time the ring transfer DP over a range of n."""
import argparse

from rainbowdom import harness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=sorted(harness.FAMILIES), default="c14")
    ap.add_argument("--to", type=int, default=200)
    ap.add_argument("--every", type=int, default=20)
    args = ap.parse_args()
    rows = harness.bench(args.family, args.to)
    print(f"{'n':>5} {'opt':>5} {'ms':>9} {'states/s':>12}")
    for r in rows:
        if r["n"] % args.every == 0 or r["n"] == rows[-1]["n"]:
            print(f"{r['n']:5d} {r['optimum']:5d} {r['elapsed_ms']:9.1f} {r['states_per_sec']:12.0f}")


if __name__ == "__main__":
    main()
