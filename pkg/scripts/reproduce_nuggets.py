"""Recompute the nugget semigroup <9, 6, 20> by every available route."""
import argparse

from compound_semigroups import (
    SuitablePair, apery_set, digit_expand, gaps, s0_closed, s_bernoulli, s_closed, s_enumerated,
    summarize,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", default="3,3")
    ap.add_argument("--b", default="2,10")
    ap.add_argument("--max-m", type=int, default=6)
    args = ap.parse_args()

    p = SuitablePair(tuple(map(int, args.a.split(","))), tuple(map(int, args.b.split(","))))
    s = summarize(p)
    print(f"generators     {p.generators}")
    print(f"apery set      {apery_set(p).elements}")
    print(f"frobenius      {s.frobenius}  digits {digit_expand(s.frobenius, p).digits}")
    print(f"genus          {s.genus}  symmetric {s.symmetric}")
    print(f"gaps           {gaps(p)}")
    print(f"S_0(A^2,B^2)   {s0_closed(p.power(2))}")
    print(f"{'m':>3} {'closed':>16} {'bernoulli':>16} {'enumerated':>16}")
    for m in range(args.max_m + 1):
        closed = s_closed(p, m) if m <= 3 else "-"
        print(f"{m:>3} {closed:>16} {s_bernoulli(p, m):>16} {s_enumerated(p, m):>16}")


if __name__ == "__main__":
    main()
