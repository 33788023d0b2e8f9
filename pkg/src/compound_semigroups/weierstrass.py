"""q-Weierstrass weight of the point at infinity on a superelliptic tower.

The tower x_i^{a_i} = f_i(x_{i-1}), deg f_i = b_i, with gcd(a_i, b_j) = 1
for all i, j, has genus S_0(A,B) and weight

    w_q = S_0(A^2,B^2)/12 - S_0(A,B)   (q = 1)
    w_q = S_0(A^2,B^2)/12              (q >= 2).

Nothing geometric is built; weights come from Sylvester sums only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .core import SuitablePair
from .errors import GcdViolation, GenusTooSmall, InternalError, PerfectPowerViolation, ValidationError
from .sylvester import s0_closed, s_bernoulli


@dataclass(frozen=True)
class TowerSpec:
    pair: SuitablePair
    shifts: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class WeightReport:
    genus: int
    q: int
    d_q: int
    weight: int


def iroot(n: int, e: int) -> int:
    """floor(n ** (1/e)) for n >= 0, by bisection on exact integers."""
    if n < 0 or e < 1:
        raise ValueError("need n >= 0 and e >= 1")
    if n < 2 or e == 1:
        return n
    lo, hi = 0, 1 << (n.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_rational_power(c: Fraction, e: int) -> bool:
    """c = r^e for some rational r."""
    c = Fraction(c)
    num, den = c.numerator, c.denominator
    if num < 0 and e % 2 == 0:
        return False
    r = iroot(abs(num), e)
    if r**e != abs(num):
        return False
    s = iroot(den, e)
    return s**e == den


def _to_fraction(c) -> Fraction:
    try:
        return Fraction(c)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational number: {c!r}") from exc


def validate_tower(pair: SuitablePair, c: Iterable | None = None) -> TowerSpec:
    """Check gcd(a_i, b_j) = 1 for all i, j and, if given, that no shift c_i is a
    rational b_i-th power (which makes x^{b_i} - c_i give a nonsingular tower)."""
    for i, a_i in enumerate(pair.a, start=1):
        for j, b_j in enumerate(pair.b, start=1):
            d = gcd(a_i, b_j)
            if d != 1:
                raise GcdViolation(i, j, d)
    shifts = None
    if c is not None:
        shifts = tuple(_to_fraction(x) for x in c)
        if len(shifts) != pair.k:
            raise ValidationError(f"expected {pair.k} shifts, got {len(shifts)}")
        for i, (ci, b_i) in enumerate(zip(shifts, pair.b), start=1):
            if is_rational_power(ci, b_i):
                raise PerfectPowerViolation(i, ci, b_i)
    return TowerSpec(pair, shifts)


def dimension(genus: int, q: int) -> int:
    """Dimension of the holomorphic q-differentials."""
    return genus if q == 1 else (genus - 1) * (2 * q - 1)


def q_weight(t: TowerSpec, q: int) -> WeightReport:
    if q < 1:
        raise ValidationError(f"q must be positive, got {q}")
    p = t.pair
    g = s0_closed(p)
    if g < 2:
        raise GenusTooSmall(g)
    t2, r = divmod(s0_closed(p.power(2)), 12)
    if r:
        raise InternalError(f"S_0(A^2,B^2) not divisible by 12 for {p}")
    weight = t2 - g if q == 1 else t2
    # the same weight from the gap sum, S_1 computed independently
    s1 = s_bernoulli(p, 1)
    via_s1 = s1 - g * (g + 1) // 2 if q == 1 else s1 - g * (g - 1) // 2
    if via_s1 != weight:
        raise InternalError(f"weight {weight} != S_1 route {via_s1} for {p}, q={q}")
    return WeightReport(g, q, dimension(g, q), weight)


def q_weight_geometric(a: int, b: int, k: int, q: int) -> WeightReport:
    if gcd(a, b) != 1:
        raise GcdViolation(1, 1, gcd(a, b))
    report = q_weight(validate_tower(SuitablePair((a,) * k, (b,) * k)), q)
    # a = b forces a = b = 1, genus 0, rejected above
    x = Fraction((b * b - 1) * a ** (2 * k + 2) - (a * a - 1) * b ** (2 * k + 2), 24 * (a * a - b * b))
    if q == 1:
        closed = x - Fraction((b - 1) * a ** (k + 1) - (a - 1) * b ** (k + 1), 2 * (a - b)) - Fraction(11, 24)
    else:
        closed = x + Fraction(1, 24)
    if closed != report.weight:
        raise InternalError(f"geometric weight {closed} != {report.weight} for a={a}, b={b}, k={k}")
    return report
