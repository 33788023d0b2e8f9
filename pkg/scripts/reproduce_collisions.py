"""Full k=2 collision search: sets agreeing in S_0..S_2 but not S_3."""
import argparse
import time

from compound_semigroups.search import count_conventions, find_collisions, write_csv, write_jsonl


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=49)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--jsonl", default="collisions.jsonl")
    ap.add_argument("--csv", default="collisions.csv")
    ap.add_argument("--show", type=int, default=5, help="print the first N records")
    args = ap.parse_args()

    t0 = time.perf_counter()
    records = find_collisions(args.k, args.lo, args.hi, workers=args.workers)
    elapsed = time.perf_counter() - t0
    write_jsonl(records, args.jsonl)
    write_csv(records, args.csv)

    counts = count_conventions(records)
    print(f"k={args.k} box {args.lo}..{args.hi}: {elapsed:.1f}s")
    print(f"unordered set pairs     {counts['set_pairs']}")
    print(f"witness pair products   {counts['witness_pairs']}")
    for r in records[: args.show]:
        print(f"{r.set1} vs {r.set2}  shared {r.shared}  S_3 {r.distinct}")


if __name__ == "__main__":
    main()
