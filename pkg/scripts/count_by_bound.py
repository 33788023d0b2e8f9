"""Collision counts as the upper bound of the search box grows."""
import argparse

from compound_semigroups.search import count_conventions, find_collisions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--start", type=int, default=10)
    ap.add_argument("--stop", type=int, default=49)
    ap.add_argument("--step", type=int, default=1)
    args = ap.parse_args()
    print("hi,set_pairs,witness_pairs")
    for hi in range(args.start, args.stop + 1, args.step):
        c = count_conventions(find_collisions(args.k, 2, hi, verify=False))
        print(f"{hi},{c['set_pairs']},{c['witness_pairs']}", flush=True)


if __name__ == "__main__":
    main()
