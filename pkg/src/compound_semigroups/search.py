"""Search for distinct compound sets whose Sylvester sums coincide.

Every suitable pair in a box lo <= a_i, b_j <= hi is reduced to its generator
set; sets are bucketed by (S_0, ..., S_match) and same-bucket sets whose
S_differ values differ are reported. Records are re-verified by gap
enumeration before they are returned.
"""
from __future__ import annotations

import csv
import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator

from .config import DEFAULT_BUDGET, Budget
from .core import SuitablePair, sequence_of
from .errors import InternalError, ValidationError
from .semigroup import frobenius_of
from .serialize import jsonable
from .sylvester import _closed_from_s0, s_bernoulli, s_closed, s_enumerated


@dataclass(frozen=True)
class CollisionRecord:
    set1: tuple[int, ...]
    set2: tuple[int, ...]
    witness1: tuple[tuple[int, ...], tuple[int, ...]]
    witness2: tuple[tuple[int, ...], tuple[int, ...]]
    shared: tuple[int, ...]       # S_0 .. S_match_through
    distinct: tuple[int, int]     # S_differ_at of set1, set2
    differ_at: int = 3
    witness_counts: tuple[int, int] = (1, 1)


def _raw_pairs(k: int, lo: int, hi: int, first: int | None = None) -> Iterator[tuple[tuple, tuple]]:
    values = range(lo, hi + 1)
    a_space = product(values, repeat=k) if first is None else (
        (first,) + rest for rest in product(values, repeat=k - 1))
    for a in a_space:
        # b_j must be coprime to every a_i with i >= j
        allowed = [[v for v in values if all(gcd(ai, v) == 1 for ai in a[j:])] for j in range(k)]
        for b in product(*allowed):
            yield a, b


def enumerate_pairs(k: int, lo: int, hi: int) -> Iterator[SuitablePair]:
    """All suitable pairs with entries in lo..hi, lexicographic in (A, B)."""
    if k < 0:
        raise ValidationError(f"k must be >= 0, got {k}")
    if not 2 <= lo <= hi:
        raise ValidationError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    for a, b in _raw_pairs(k, lo, hi):
        yield SuitablePair(a, b)


def _s0_raw(a, b, e):
    if e != 1:
        a = tuple(x**e for x in a)
        b = tuple(x**e for x in b)
    return (frobenius_of(a, b) + 1) // 2


def _sums_raw(a, b, top):
    if top <= 3:
        s0 = _s0_raw(a, b, 1)
        t = _s0_raw(a, b, 2) if top >= 1 else 0
        u = _s0_raw(a, b, 4) if top >= 3 else None
        return tuple(_closed_from_s0(s0, t, u, m) for m in range(top + 1))
    p = SuitablePair(a, b)
    return tuple(s_bernoulli(p, m) for m in range(top + 1))


def _scan(k, lo, hi, first, top):
    """set -> [sums, first witness, witness count] for one slice of the space."""
    table = {}
    for a, b in _raw_pairs(k, lo, hi, first):
        key = tuple(sorted(set(sequence_of(a, b))))
        entry = table.get(key)
        if entry is None:
            table[key] = [_sums_raw(a, b, top), (a, b), 1]
        else:
            entry[2] += 1
    return table


def _scan_star(args):
    return _scan(*args)


def scan_sets(k: int, lo: int, hi: int, top: int, workers: int = 1) -> dict:
    """Distinct generator sets in the box with S_0..S_top, merged over a_1 slices."""
    if k == 0:
        return _scan(0, lo, hi, None, top)
    jobs = [(k, lo, hi, a1, top) for a1 in range(lo, hi + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_star, jobs))
    else:
        parts = [_scan_star(j) for j in jobs]
    merged = {}
    for part in parts:  # slices arrive in a_1 order, so the first witness is lexicographic
        for key, (sums, wit, count) in part.items():
            entry = merged.get(key)
            if entry is None:
                merged[key] = [sums, wit, count]
            else:
                if entry[0] != sums:
                    raise InternalError(f"set {key} got two different sum vectors")
                entry[2] += count
    return merged


def find_collisions(k: int, lo: int, hi: int, match_through: int = 2, differ_at: int = 3,
                    workers: int = 1, verify: bool = True,
                    budget: Budget = DEFAULT_BUDGET) -> list[CollisionRecord]:
    if not 0 <= match_through < differ_at:
        raise ValidationError("need 0 <= match_through < differ_at")
    if not 2 <= lo <= hi:
        raise ValidationError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    table = scan_sets(k, lo, hi, differ_at, workers)
    buckets = defaultdict(list)
    for key, (sums, _, _) in table.items():
        buckets[sums[: match_through + 1]].append(key)
    records = []
    for shared, keys in buckets.items():
        if len(keys) < 2:
            continue
        keys.sort()
        for i, s1 in enumerate(keys):
            for s2 in keys[i + 1 :]:
                d1, d2 = table[s1][0][differ_at], table[s2][0][differ_at]
                if d1 == d2:
                    continue
                records.append(CollisionRecord(
                    s1, s2, table[s1][1], table[s2][1], shared, (d1, d2),
                    differ_at, (table[s1][2], table[s2][2]),
                ))
    records.sort(key=lambda r: (r.shared[0], r.set1, r.set2))
    if verify:
        for r in records:
            verify_record(r, budget)
    return records


def verify_record(r: CollisionRecord, budget: Budget = DEFAULT_BUDGET) -> None:
    """Recompute every sum of a record by gap enumeration (and closed forms where defined)."""
    p1, p2 = SuitablePair(*r.witness1), SuitablePair(*r.witness2)
    for p, key in ((p1, r.set1), (p2, r.set2)):
        if tuple(sorted(set(p.generators))) != key:
            raise InternalError(f"witness {p} does not generate {key}")
    for m in range(len(r.shared)):
        e1, e2 = s_enumerated(p1, m, budget), s_enumerated(p2, m, budget)
        if not e1 == e2 == r.shared[m]:
            raise InternalError(f"S_{m} mismatch on re-verification of {r.set1} vs {r.set2}")
    d1, d2 = (s_enumerated(p, r.differ_at, budget) for p in (p1, p2))
    if (d1, d2) != r.distinct or d1 == d2:
        raise InternalError(f"S_{r.differ_at} mismatch on re-verification of {r.set1} vs {r.set2}")
    if r.differ_at <= 3 and (s_closed(p1, r.differ_at), s_closed(p2, r.differ_at)) != r.distinct:
        raise InternalError(f"closed-form S_{r.differ_at} disagrees for {r.set1} vs {r.set2}")


def count_conventions(records: list[CollisionRecord]) -> dict[str, int]:
    """Record count as unordered set pairs, and as combinations of (A,B) witnesses."""
    return {
        "set_pairs": len(records),
        "witness_pairs": sum(w1 * w2 for w1, w2 in (r.witness_counts for r in records)),
    }


def record_dict(r: CollisionRecord) -> dict:
    return jsonable(r)


def write_jsonl(records, path) -> None:
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(record_dict(r)) + "\n")


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["set1", "set2", "witness1_a", "witness1_b", "witness2_a", "witness2_b",
                    "shared", "distinct1", "distinct2", "witnesses1", "witnesses2"])
        for r in records:
            def fmt(t):
                return " ".join(map(str, t))
            w.writerow([fmt(r.set1), fmt(r.set2), fmt(r.witness1[0]), fmt(r.witness1[1]),
                        fmt(r.witness2[0]), fmt(r.witness2[1]), fmt(r.shared),
                        r.distinct[0], r.distinct[1], *r.witness_counts])
