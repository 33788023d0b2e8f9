"""Sylvester power sums S_m(A,B) = sum of n^m over the gaps of R(A,B).

Three independent routes:

* ``s_closed``     closed forms in S_0(A^e, B^e) for m <= 3
* ``s_bernoulli``  the exponential-generating-function formula, any m
* ``s_enumerated`` summing powers over the enumerated gap set

Rationals are ``fractions.Fraction``; Bernoulli numbers use B_1 = -1/2,
the convention of z / (e^z - 1).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, prod

from .config import DEFAULT_BUDGET, Budget
from .core import SuitablePair
from .errors import GcdViolation, InternalError, ValidationError
from .semigroup import SemigroupSummary, frobenius_closed, gaps, summarize


class BernoulliCache:
    """Grow-only table of Bernoulli numbers, safe under concurrent readers."""

    def __init__(self):
        self._lock = threading.Lock()
        self._values: list[Fraction] = []
        self._row: list[Fraction] = []  # Akiyama-Tanigawa working row

    def __len__(self):
        return len(self._values)

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise ValidationError(f"Bernoulli index must be >= 0, got {m}")
        values = self._values
        if m < len(values):
            return values[m]
        with self._lock:
            while len(self._values) <= m:
                self._extend()
            return self._values[m]

    def _extend(self) -> None:
        n = len(self._values)
        row = self._row
        row.append(Fraction(1, n + 1))
        for j in range(n, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        b = row[0]
        if n == 1:
            b = -b  # Akiyama-Tanigawa yields +1/2
        self._values.append(b)


_DEFAULT_CACHE = BernoulliCache()


def bernoulli(m: int, cache: BernoulliCache | None = None) -> Fraction:
    return (cache or _DEFAULT_CACHE).get(m)


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InternalError(f"{what} evaluated to non-integer {x}")
    return x.numerator


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"{what}: {num} not divisible by {den}")
    return q


# -- closed forms ------------------------------------------------------------

def s0_closed(p: SuitablePair) -> int:
    """Genus: (a_k b_1 sigma(pi_k(A), pi_1(B)) - sigma(A,B) + 1) / 2."""
    return _exact_div(frobenius_closed(p) + 1, 2, "S_0")


def _closed_from_s0(s0: int, t: int, u: int | None, m: int) -> int:
    """S_m from s0 = S_0(A,B), t = S_0(A^2,B^2), u = S_0(A^4,B^4).

    Each form is put over a common denominator so the only division is a
    final exact one.
    """
    if m == 0:
        return s0
    if m == 1:
        return _exact_div(6 * (s0 * s0 - s0) + t, 12, "S_1")
    if m == 2:
        return _exact_div(2 * (s0 - 1) * s0 * (2 * s0 - 1) + t * (2 * s0 - 1), 12, "S_2")
    if m == 3:
        q = s0 * s0 - s0
        return _exact_div(60 * q * q + 60 * t * q + 5 * t * (t + 2) - u, 240, "S_3")
    raise ValidationError(f"closed forms cover m = 0..3, got {m}")


def s_closed(p: SuitablePair, m: int) -> int:
    if not 0 <= m <= 3:
        raise ValidationError(f"closed forms cover m = 0..3, got {m}")
    s0 = s0_closed(p)
    t = s0_closed(p.power(2)) if m >= 1 else 0
    u = s0_closed(p.power(4)) if m == 3 else None
    return _closed_from_s0(s0, t, u, m)


def s_closed_all(p: SuitablePair) -> tuple[int, int, int, int]:
    """(S_0, S_1, S_2, S_3) sharing the three S_0 evaluations."""
    s0 = s0_closed(p)
    t = s0_closed(p.power(2))
    u = s0_closed(p.power(4))
    return tuple(_closed_from_s0(s0, t, u, m) for m in range(4))


# -- enumeration -------------------------------------------------------------

def s_enumerated(p: SuitablePair, m: int, budget: Budget = DEFAULT_BUDGET) -> int:
    if m < 0:
        raise ValidationError(f"m must be >= 0, got {m}")
    return sum(n**m for n in gaps(p, budget))


# -- Bernoulli-number formula ------------------------------------------------

@dataclass(frozen=True)
class CompositionIndex:
    x: tuple[int, ...]  # x_0..x_k
    y: tuple[int, ...]  # y_1..y_k


def composition_count(m: int, k: int) -> int:
    """Number of (x_0..x_k, y_1..y_k) >= 0 summing to m."""
    return comb(m + 2 * k, 2 * k)


def _compositions(total: int, slots: int, is_x: list[bool]):
    """Lexicographic compositions of `total` into `slots` parts.

    x-slots skip odd values >= 3, whose Bernoulli factor vanishes.
    """
    out = [0] * slots

    def rec(pos, remaining):
        if pos == slots - 1:
            if not (is_x[pos] and remaining >= 3 and remaining % 2):
                out[pos] = remaining
                yield tuple(out)
            return
        for v in range(remaining + 1):
            if is_x[pos] and v >= 3 and v % 2:
                continue
            out[pos] = v
            yield from rec(pos + 1, remaining - v)

    if slots == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


def iter_compositions(m: int, k: int):
    """CompositionIndex values with sum(x) + sum(y) = m, in order (x_0..x_k, y_1..y_k)."""
    is_x = [True] * (k + 1) + [False] * k
    for c in _compositions(m, 2 * k + 1, is_x):
        yield CompositionIndex(c[: k + 1], c[k + 1 :])


def s_bernoulli(p: SuitablePair, m: int, budget: Budget = DEFAULT_BUDGET,
                cache: BernoulliCache | None = None) -> int:
    """S_m via the Bernoulli formula with M = m + 1:

        S_{M-1} = (M!/M) sum prod_i B_{x_i}/x_i! * prod_i a_i^alpha(i) b_i^beta(i)
                  / prod_j (y_j+1)!  -  B_M / M

    alpha(i) = sum_{l<=i} (x_{l-1} + y_l),  beta(i) = sum_{l>=i} (x_l + y_l).
    """
    if m < 0:
        raise ValidationError(f"m must be >= 0, got {m}")
    k = p.k
    if k == 0:
        return 0
    M = m + 1
    budget.check("Bernoulli-formula compositions", composition_count(M, k), budget.compositions)
    cache = cache or _DEFAULT_CACHE
    B = [cache.get(i) for i in range(M + 1)]
    fact = [factorial(i) for i in range(M + 2)]
    a, b = p.a, p.b

    total = Fraction(0)
    for c in iter_compositions(M, k):
        x, y = c.x, c.y
        w = Fraction(1)
        for xi in x:
            if xi:
                w *= B[xi] / fact[xi]
        den = prod(fact[yj + 1] for yj in y)
        mono = 1
        alpha = 0
        for i in range(1, k + 1):
            alpha += x[i - 1] + y[i - 1]
            if alpha:
                mono *= a[i - 1] ** alpha
        beta = 0
        for i in range(k, 0, -1):
            beta += x[i] + y[i - 1]
            if beta:
                mono *= b[i - 1] ** beta
        total += w * Fraction(mono, den)
    result = total * fact[M] / M - B[M] / M
    return _exact(result, f"S_{m} via Bernoulli formula")


# -- geometric and supersymmetric specializations ----------------------------

def _sigma_geometric(a: int, b: int, k: int) -> int:
    """sigma(a,b;k) = sum_{i=0}^k a^{k-i} b^i; 0 for k = -1."""
    return sum(a ** (k - i) * b**i for i in range(k + 1))


def s0_geometric(a: int, b: int, k: int) -> int:
    """Genus of <a^k, a^{k-1} b, ..., b^k>, by two formulas that must agree."""
    num = a * b * _sigma_geometric(a, b, k - 1) - _sigma_geometric(a, b, k) + 1
    s0 = _exact_div(num, 2, "S_0(a,b;k)")
    if a != b:
        alt = Fraction((b - 1) * a ** (k + 1) - (a - 1) * b ** (k + 1) + a - b, 2 * (a - b))
        if alt != s0:
            raise InternalError(f"S_0({a},{b};{k}): {s0} != alternative form {alt}")
    return s0


def s_geometric(a: int, b: int, k: int, m: int) -> int:
    if a < 1 or b < 1 or k < 0:
        raise ValidationError("need a, b >= 1 and k >= 0")
    if gcd(a, b) != 1:
        raise GcdViolation(1, 1, gcd(a, b))
    if not 0 <= m <= 3:
        raise ValidationError(f"closed forms cover m = 0..3, got {m}")
    s0 = s0_geometric(a, b, k)
    t = s0_geometric(a * a, b * b, k) if m >= 1 else 0
    u = s0_geometric(a**4, b**4, k) if m == 3 else None
    return _closed_from_s0(s0, t, u, m)


def geometric_pair(a: int, b: int, k: int) -> SuitablePair:
    return SuitablePair((a,) * k, (b,) * k)


def supersymmetric_summary(a: tuple[int, ...], budget: Budget = DEFAULT_BUDGET) -> SemigroupSummary:
    """Semigroup generated by P / a_i, P = prod(a), for pairwise coprime a_0..a_k."""
    a = tuple(a)
    if not a:
        raise ValidationError("need at least one entry")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            d = gcd(a[i], a[j])
            if d != 1:
                raise GcdViolation(i + 1, j + 1, d)
    k = len(a) - 1
    p = SuitablePair(a[1:], a[:-1])
    P = prod(a)
    if p.generators != tuple(P // ai for ai in a):
        raise InternalError(f"generators {p.generators} != P / a_i for {a}")
    sig = sum(p.generators)
    frob = k * P - sig
    genus = _exact_div(1 + k * P - sig, 2, "supersymmetric genus")
    summary = summarize(p, budget)
    if (summary.frobenius, summary.genus) != (frob, genus):
        raise InternalError(f"supersymmetric formulas disagree with enumeration for {a}")
    return summary
