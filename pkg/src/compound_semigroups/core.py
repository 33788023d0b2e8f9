"""Suitable pairs, compound sequences and their mixed-radix digit expansions.

A pair of k-tuples A = (a_1..a_k), B = (b_1..b_k) is *suitable* when
gcd(a_i, b_j) = 1 for every i >= j. It generates the compound sequence

    g_i = b_1 ... b_i * a_{i+1} ... a_k,    0 <= i <= k,

so g_0 = prod(A) and g_i = g_{i-1} * b_i / a_i. For k = 0 the sequence is (1).

Indices in user-facing errors are 1-based to match the a_i / b_j naming.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import GcdViolation, IndexOutOfRange, InternalError, LengthMismatch, ValidationError


def _as_tuple(entries: Iterable[int], name: str) -> tuple[int, ...]:
    t = tuple(entries)
    for x in t:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"{name} entries must be integers, got {x!r}")
        if x < 1:
            raise ValidationError(f"{name} entries must be >= 1, got {x}")
    return t


# -- tuple operators ---------------------------------------------------------

def project(t: Sequence[int], i: int) -> tuple[int, ...]:
    """Delete the i-th entry (1-based)."""
    if not 1 <= i <= len(t):
        raise IndexOutOfRange(f"projection index {i} outside 1..{len(t)}")
    return tuple(t[: i - 1]) + tuple(t[i:])


def reverse(t: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(t))


def power(t: Sequence[int], e: int) -> tuple[int, ...]:
    if e < 1:
        raise ValidationError(f"exponent must be positive, got {e}")
    return tuple(x**e for x in t)


# -- pairs and sequences -----------------------------------------------------

@dataclass(frozen=True)
class SuitablePair:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = _as_tuple(self.a, "A")
        b = _as_tuple(self.b, "B")
        if len(a) != len(b):
            raise LengthMismatch(len(a), len(b))
        for i in range(len(a)):
            for j in range(i + 1):
                d = gcd(a[i], b[j])
                if d != 1:
                    raise GcdViolation(i + 1, j + 1, d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def k(self) -> int:
        return len(self.a)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return build_sequence(self).generators

    def power(self, e: int) -> SuitablePair:
        return SuitablePair(power(self.a, e), power(self.b, e))

    def dual(self) -> SuitablePair:
        """(rho(B), rho(A)); generates the reversed sequence."""
        return SuitablePair(reverse(self.b), reverse(self.a))

    def __str__(self) -> str:
        return f"A={self.a}, B={self.b}"


def validate_suitable(a: Iterable[int], b: Iterable[int]) -> SuitablePair:
    return SuitablePair(tuple(a), tuple(b))


@dataclass(frozen=True)
class CompoundSequence:
    generators: tuple[int, ...]
    source: SuitablePair = field(repr=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def sequence_of(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Generators of raw tuples, no validation. Exact only for suitable input."""
    g = prod(a)
    gens = [g]
    for a_i, b_i in zip(a, b):
        g = g * b_i // a_i
        gens.append(g)
    return tuple(gens)


def build_sequence(p: SuitablePair) -> CompoundSequence:
    g = prod(p.a)
    gens = [g]
    for a_i, b_i in zip(p.a, p.b):
        q, r = divmod(g * b_i, a_i)
        if r:
            raise InternalError(f"g_{len(gens)} not integral for {p}")
        g = q
        gens.append(g)
    return CompoundSequence(tuple(gens), p)


def sigma(p: SuitablePair) -> int:
    """Sum of the generators."""
    return sum(p.generators)


def normalize(p: SuitablePair) -> SuitablePair:
    """Equivalent pair with every entry >= 2, or the empty pair if 1 is a generator.

    Scans left to right; at the first index holding a 1 the a-rule is tried
    before the b-rule, then the scan restarts.
    """
    if 1 in p.generators:
        return SuitablePair((), ())
    a, b = list(p.a), list(p.b)
    while True:
        for i in range(len(a)):
            if a[i] == 1:
                # g_i = b_i g_{i-1}: drop g_i, fold b_i into b_{i+1}
                if i + 1 < len(b):
                    b[i + 1] *= b[i]
                del a[i], b[i]
                break
            if b[i] == 1:
                # g_i divides g_{i-1}: drop g_{i-1}, fold a_i into a_{i-1}
                if i > 0:
                    a[i - 1] *= a[i]
                del a[i], b[i]
                break
        else:
            return SuitablePair(tuple(a), tuple(b))


# -- digit expansions --------------------------------------------------------

@dataclass(frozen=True)
class DigitExpansion:
    pivot: int
    digits: tuple[int, ...]
    value: int


def digit_expand(n: int, p: SuitablePair, j: int = 0) -> DigitExpansion:
    """The unique n = sum n_i g_i with 0 <= n_i < b_{i+1} (i < j), 0 <= n_i < a_i (i > j).

    Digits are peeled off from both ends toward the pivot. Every generator
    right of the current left end is divisible by the next b, while that
    end's generator is a unit modulo it, so the leftmost digit is forced
    modulo b; dividing out leaves the compound sequence of the trimmed
    pair. The right end works the same way with a_k.
    """
    k = p.k
    if not 0 <= j <= k:
        raise IndexOutOfRange(f"pivot {j} outside 0..{k}")
    gens = list(p.generators)
    digits = [0] * (k + 1)
    val = n
    lo, hi = 0, k
    while lo < j:
        m = p.b[lo]
        d = (val * pow(gens[lo], -1, m)) % m if m > 1 else 0
        digits[lo] = d
        val, r = divmod(val - d * gens[lo], m)
        assert r == 0
        for t in range(lo + 1, hi + 1):
            gens[t] //= m
        lo += 1
    while hi > j:
        m = p.a[hi - 1]
        d = (val * pow(gens[hi], -1, m)) % m if m > 1 else 0
        digits[hi] = d
        val, r = divmod(val - d * gens[hi], m)
        assert r == 0
        for t in range(lo, hi):
            gens[t] //= m
        hi -= 1
    assert gens[j] == 1
    digits[j] = val
    return DigitExpansion(j, tuple(digits), n)


def is_representable(n: int, p: SuitablePair, j: int = 0) -> bool:
    """n is a non-negative combination of the generators."""
    if n < 0:
        return False
    return digit_expand(n, p, j).digits[j] >= 0
