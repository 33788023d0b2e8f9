"""Apery set, gaps, Frobenius number, genus and symmetry of R(A,B)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_BUDGET, Budget
from .core import SuitablePair, sequence_of
from .errors import InternalError


@dataclass(frozen=True)
class AperySet:
    """Apery set of R(A,B) with respect to g_0, as a sorted tuple."""

    modulus: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class SemigroupSummary:
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    symmetric: bool
    generators: tuple[int, ...] = ()


def digit_box_sums(gens, bounds):
    """All sums n_1 g_1 + ... with 0 <= n_i < bounds[i]."""
    sums = [0]
    for g, bound in zip(gens, bounds):
        sums = [s + n * g for s in sums for n in range(bound)]
    return sums


def apery_set(p: SuitablePair, budget: Budget = DEFAULT_BUDGET) -> AperySet:
    g0 = p.generators[0]
    budget.check("Apery set size g_0", g0, budget.enumeration)
    elements = digit_box_sums(p.generators[1:], p.a)
    return AperySet(g0, tuple(sorted(elements)))


def gaps(p: SuitablePair, budget: Budget = DEFAULT_BUDGET) -> list[int]:
    """NR(A,B): every Apery element w leaves the gaps w - g_0, w - 2 g_0, ... > 0."""
    ap = apery_set(p, budget)
    g0 = ap.modulus
    genus = sum(w // g0 for w in ap)
    budget.check("genus", genus, budget.genus)
    out = [w - t * g0 for w in ap for t in range(1, w // g0 + 1)]
    out.sort()
    return out


def frobenius_of(a: Sequence[int], b: Sequence[int]) -> int:
    """a_k b_1 sigma(pi_k(A), pi_1(B)) - sigma(A,B) on raw tuples; -1 for k = 0."""
    if not a:
        return -1
    return a[-1] * b[0] * sum(sequence_of(a[:-1], b[1:])) - sum(sequence_of(a, b))


def frobenius_closed(p: SuitablePair) -> int:
    return frobenius_of(p.a, p.b)


def summarize(p: SuitablePair, budget: Budget = DEFAULT_BUDGET) -> SemigroupSummary:
    gap_list = gaps(p, budget)
    genus = len(gap_list)
    frob = frobenius_closed(p)
    if (gap_list[-1] if gap_list else -1) != frob:
        raise InternalError(f"closed-form Frobenius {frob} != enumerated for {p}")
    gap_set = set(gap_list)
    # exactly one of x, F - x is in R for 0 <= x <= F
    symmetric = all((x in gap_set) != ((frob - x) in gap_set) for x in range(frob + 1))
    if symmetric != (2 * genus == frob + 1):
        raise InternalError(f"symmetry definition disagrees with 2g = F + 1 for {p}")
    return SemigroupSummary(frob, genus, tuple(gap_list), symmetric, p.generators)

