"""Both sides of the generalized Tuenter identity

    sum_{n in NR} [f(n + g_j) - f(n)] = sum_{n in U_{j,0}} f(n) - sum_{n=0}^{g_j - 1} f(n)

for a suitable pair, a pivot j and any integer-valued f on n >= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .config import DEFAULT_BUDGET, Budget
from .core import SuitablePair
from .errors import IndexOutOfRange, InternalError, ValidationError
from .semigroup import digit_box_sums, frobenius_closed, gaps

IntFunction = Callable[[int], int]


@dataclass(frozen=True)
class UjZeroSet:
    pivot: int
    values: tuple[int, ...]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class TuenterResult:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _pivot_box(p: SuitablePair, j: int):
    """Generators other than g_j with their digit bounds: n_i < b_{i+1} left
    of the pivot, n_i < a_i right of it."""
    gens = p.generators[:j] + p.generators[j + 1 :]
    bounds = [p.b[i] for i in range(j)] + [p.a[i - 1] for i in range(j + 1, p.k + 1)]
    return gens, bounds


def u_j_zero(p: SuitablePair, j: int, budget: Budget = DEFAULT_BUDGET) -> UjZeroSet:
    """Sums over the digit box of pivot j with n_j = 0; exactly g_j values."""
    if not 0 <= j <= p.k:
        raise IndexOutOfRange(f"pivot {j} outside 0..{p.k}")
    gens = p.generators
    budget.check(f"U_{{{j},0}} size g_{j}", gens[j], budget.enumeration)
    values = digit_box_sums(*_pivot_box(p, j))
    if len(values) != gens[j]:
        raise InternalError(f"|U_{{{j},0}}| = {len(values)} != g_{j} = {gens[j]}")
    return UjZeroSet(j, tuple(sorted(values)))


def tuenter_check(p: SuitablePair, j: int, f: IntFunction, exclude_zero: bool = False,
                  budget: Budget = DEFAULT_BUDGET) -> TuenterResult:
    """Evaluate both sides. ``exclude_zero`` drops the n = 0 terms on the right,
    which is the form valid for f defined only on the positive integers."""
    u = u_j_zero(p, j, budget)
    gj = p.generators[j]
    nr = gaps(p, budget)
    lhs = sum(f(n + gj) - f(n) for n in nr)
    start = 1 if exclude_zero else 0
    rhs = sum(f(n) for n in u.values if n >= start) - sum(f(n) for n in range(start, gj))
    return TuenterResult(lhs, rhs)


def classical_rhs(a: int, b: int, f: IntFunction) -> int:
    """Right side of the two-generator identity: sum_{n=1}^{a-1} (f(nb) - f(n))."""
    return sum(f(n * b) - f(n) for n in range(1, a))


def monomial(m: int) -> IntFunction:
    if m < 0:
        raise ValidationError(f"exponent must be >= 0, got {m}")
    return lambda n: n**m


class TabulatedFunction:
    """f given by a finite table; evaluating outside it is an error."""

    def __init__(self, table: Sequence[int] | Mapping[int, int]):
        if isinstance(table, Mapping):
            self._table = {int(k): int(v) for k, v in table.items()}
        else:
            self._table = {i: int(v) for i, v in enumerate(table)}

    def __call__(self, n: int) -> int:
        try:
            return self._table[n]
        except KeyError:
            raise ValidationError(f"tabulated f has no value at n = {n}") from None

    @property
    def max_argument(self) -> int:
        return max(self._table, default=-1)


def required_domain(p: SuitablePair, j: int) -> int:
    """Largest argument tuenter_check evaluates f at."""
    gj = p.generators[j]
    u_max = sum(g * (bound - 1) for g, bound in zip(*_pivot_box(p, j)))
    return max(frobenius_closed(p) + gj, gj - 1, u_max)
