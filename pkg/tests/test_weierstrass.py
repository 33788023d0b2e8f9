from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from compound_semigroups import (
    GcdViolation, GenusTooSmall, PerfectPowerViolation, SuitablePair, ValidationError,
    q_weight, q_weight_geometric, s0_closed, validate_tower,
)
from compound_semigroups.weierstrass import dimension, iroot, is_rational_power

NUGGET = SuitablePair((3, 3), (2, 10))


def test_validate_tower_examples():
    t = validate_tower(NUGGET, (2, 3))
    assert t.shifts == (2, 3)
    with pytest.raises(PerfectPowerViolation) as exc:
        validate_tower(NUGGET, (4, 3))
    assert exc.value.i == 1
    with pytest.raises(GcdViolation):
        validate_tower(SuitablePair((3, 2), (5, 3)))
    with pytest.raises(ValidationError):
        validate_tower(NUGGET, (2,))
    with pytest.raises(PerfectPowerViolation):
        validate_tower(NUGGET, (Fraction(9, 4), 3))


def test_iroot_and_rational_powers():
    assert iroot(0, 3) == 0
    assert iroot(10**40, 4) == 10**10
    assert iroot(10**40 - 1, 4) == 10**10 - 1
    assert is_rational_power(Fraction(-8, 27), 3)
    assert not is_rational_power(Fraction(-4), 2)
    assert not is_rational_power(Fraction(3), 10)
    assert is_rational_power(Fraction(1024), 10)


def test_q_weight_examples():
    t = validate_tower(NUGGET)
    assert q_weight(t, 1).weight == 1704 // 12 - 22 == 120
    assert q_weight(t, 2).weight == 142
    assert q_weight(t, 3).weight == 142
    assert q_weight(validate_tower(SuitablePair((3,), (5,))), 1).weight == 96 // 12 - 4 == 4


def test_q_weight_geometric_examples():
    assert q_weight_geometric(3, 5, 1, 2).weight == q_weight(validate_tower(SuitablePair((3,), (5,))), 2).weight == 8
    assert s0_closed(SuitablePair((4, 4), (9, 9))) == 168
    assert q_weight_geometric(2, 3, 2, 2).weight == 14
    assert q_weight_geometric(2, 3, 2, 1).weight == 8


def test_genus_too_small():
    with pytest.raises(GenusTooSmall):
        q_weight(validate_tower(SuitablePair((2,), (3,))), 2)
    with pytest.raises(GenusTooSmall):
        q_weight(validate_tower(SuitablePair((), ())), 1)


def test_dimension_law():
    assert dimension(22, 1) == 22
    assert dimension(22, 2) == 63
    r = q_weight(validate_tower(NUGGET), 4)
    assert r.d_q == 21 * 7


@given(st.integers(2, 9), st.integers(2, 9), st.integers(1, 3))
def test_constancy_over_q(a, b, k):
    from math import gcd
    if gcd(a, b) != 1 or s0_closed(SuitablePair((a,) * k, (b,) * k)) < 2:
        return
    weights = {q_weight_geometric(a, b, k, q).weight for q in range(2, 11)}
    assert len(weights) == 1
