from itertools import product
from math import prod

import pytest
from hypothesis import given, strategies as st

from compound_semigroups import (
    GcdViolation, IndexOutOfRange, LengthMismatch, SuitablePair, ValidationError,
    build_sequence, digit_expand, is_representable, normalize, power, project, reverse,
    sigma, validate_suitable,
)
from compound_semigroups.oracle import dp_table
from compound_semigroups.semigroup import frobenius_closed

from conftest import suitable_pairs

NUGGET = SuitablePair((3, 3), (2, 10))


def test_validate_examples():
    assert validate_suitable((3, 3), (2, 10)) == NUGGET
    assert validate_suitable((), ()).k == 0
    with pytest.raises(GcdViolation) as exc:
        validate_suitable((2, 3), (2, 5))
    assert (exc.value.i, exc.value.j) == (1, 1)


def test_validate_rejects_bad_input():
    with pytest.raises(LengthMismatch):
        validate_suitable((2, 3), (5,))
    with pytest.raises(ValidationError):
        validate_suitable((0,), (5,))
    with pytest.raises(ValidationError):
        validate_suitable((2.0,), (5,))
    # gcd(a_2, b_1) matters, gcd(a_1, b_2) does not
    with pytest.raises(GcdViolation) as exc:
        validate_suitable((3, 2), (2, 3))
    assert (exc.value.i, exc.value.j) == (2, 1)
    validate_suitable((3, 2), (5, 3))


def test_build_sequence_examples():
    assert build_sequence(NUGGET).generators == (9, 6, 20)
    assert SuitablePair((8, 2), (5, 7)).generators == (16, 10, 35)
    assert SuitablePair((), ()).generators == (1,)


def test_sigma_examples():
    assert sigma(NUGGET) == 35
    assert sigma(SuitablePair((), ())) == 1
    a, b, k = 2, 3, 2
    assert sigma(SuitablePair((2, 2), (3, 3))) == (a ** (k + 1) - b ** (k + 1)) // (a - b) == 19


def test_tuple_operators():
    assert project((3, 3), 2) == (3,)
    assert reverse((5, 7)) == (7, 5)
    assert power((2, 10), 2) == (4, 100)
    with pytest.raises(IndexOutOfRange):
        project((3, 3), 3)
    with pytest.raises(IndexOutOfRange):
        project((3, 3), 0)


def _members(gens, limit):
    t = dp_table(gens, limit)
    return [n for n in range(limit + 1) if t.reachable[n]]


def test_normalize_examples():
    n = normalize(SuitablePair((1, 3), (2, 5)))
    assert (n.a, n.b) == ((3,), (10,))
    assert _members(n.generators, 60) == _members(SuitablePair((1, 3), (2, 5)).generators, 60)
    assert normalize(SuitablePair((2,), (1,))) == SuitablePair((), ())
    assert normalize(NUGGET) == NUGGET


@given(suitable_pairs(max_k=3, lo=1, hi=6))
def test_normalize_preserves_semigroup(p):
    n = normalize(p)
    assert all(x >= 2 for x in n.a + n.b)
    limit = max(frobenius_closed(p), 0) + max(p.generators) + 5
    assert _members(n.generators, limit) == _members(p.generators, limit)


def test_digit_expand_examples():
    assert digit_expand(7, SuitablePair((3,), (5,)), 0).digits == (-1, 2)
    assert digit_expand(43, NUGGET, 0).digits == (-1, 2, 2)
    for j in range(3):
        assert digit_expand(0, NUGGET, j).digits == (0, 0, 0)
    with pytest.raises(IndexOutOfRange):
        digit_expand(5, NUGGET, 3)


def _in_box(p, j, digits):
    left = all(0 <= digits[i] < p.b[i] for i in range(j))
    right = all(0 <= digits[i] < p.a[i - 1] for i in range(j + 1, p.k + 1))
    return left and right


@given(suitable_pairs(), st.integers(-500, 2000), st.data())
def test_digit_expand_reconstructs(p, n, data):
    j = data.draw(st.integers(0, p.k))
    d = digit_expand(n, p, j)
    assert sum(x * g for x, g in zip(d.digits, p.generators)) == n
    assert _in_box(p, j, d.digits)


@given(suitable_pairs(max_k=2, lo=1, hi=5), st.data())
def test_digit_expand_unique(p, data):
    # every box vector with a bounded pivot digit hits a distinct integer
    j = data.draw(st.integers(0, p.k))
    ranges = [range(p.b[i]) for i in range(j)] + [range(-3, 4)] + \
        [range(p.a[i - 1]) for i in range(j + 1, p.k + 1)]
    seen = {}
    for digits in product(*ranges):
        n = sum(x * g for x, g in zip(digits, p.generators))
        assert n not in seen
        seen[n] = digits
        assert digit_expand(n, p, j).digits == digits


@given(suitable_pairs(), st.integers(-50, 1500))
def test_pivot_independence_and_oracle(p, n):
    answers = {is_representable(n, p, j) for j in range(p.k + 1)}
    assert len(answers) == 1
    if n >= 0:
        assert answers.pop() == (n in dp_table(p.generators, n))


@given(suitable_pairs(), st.integers(0, 1500))
def test_duality(p, n):
    d = p.dual()
    assert d.generators == tuple(reversed(p.generators))
    assert is_representable(n, p) == is_representable(n, d)


def test_is_representable_examples():
    assert not is_representable(13, NUGGET)
    assert is_representable(15, NUGGET)
    assert not is_representable(-1, NUGGET)
    assert not is_representable(43, NUGGET)
    assert all(is_representable(n, NUGGET) for n in range(44, 200))


def test_generators_product_identity():
    p = SuitablePair((4, 9, 5), (7, 2, 3))
    g = p.generators
    assert g[0] == prod(p.a) and g[-1] == prod(p.b)
