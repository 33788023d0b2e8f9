"""Brute-force reachability, used as ground truth.

Deliberately knows nothing about compound structure: the generators are an
arbitrary list and nothing here imports from the rest of the package.
"""
from dataclasses import dataclass

DEFAULT_LIMIT_CAP = 10**7


class OracleBudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ReachTable:
    limit: int
    reachable: bytearray

    def __contains__(self, n):
        return 0 <= n <= self.limit and bool(self.reachable[n])


def dp_table(generators, limit, cap=DEFAULT_LIMIT_CAP):
    gens = sorted(set(int(g) for g in generators))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be a nonempty list of positive integers")
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit > cap:
        raise OracleBudgetExceeded(f"limit {limit} exceeds cap {cap}")
    reach = bytearray(limit + 1)
    reach[0] = 1
    for n in range(1, limit + 1):
        for g in gens:
            if g > n:
                break
            if reach[n - g]:
                reach[n] = 1
                break
    return ReachTable(limit, reach)


def oracle_gaps(generators, limit, cap=DEFAULT_LIMIT_CAP):
    table = dp_table(generators, limit, cap)
    return [n for n in range(limit + 1) if not table.reachable[n]]
