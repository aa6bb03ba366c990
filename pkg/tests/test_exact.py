from __future__ import annotations

import random
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compass_grid.exact import (
    Constructible,
    DivisionByZero,
    NegativeRadicand,
    UnparseableRadical,
    add,
    approx,
    approx_sig,
    div,
    equals,
    from_rational,
    mul,
    parse_expr,
    sign,
    sqrt,
    sub,
    to_expr,
)
from conftest import constructibles, nonneg_rationals, small_rationals
from oracles import eval_exact, random_tree, sign_agreement

C = Constructible


def test_examples():
    assert equals(mul(sqrt(2), sqrt(8)), 4)
    assert sqrt(12) == 2 * sqrt(3)
    assert sqrt(12).radicands == (C(3),)
    assert approx(Fraction(22, 7), 2) == "3.14"
    assert approx(sqrt(2), 5) == "1.41421"
    assert sign(sub(sqrt(2), Fraction(141421, 100000))) == 1


def test_rationals_have_empty_tower():
    x = from_rational(Fraction(-3, 4))
    assert x.depth == 0 and x.is_rational()
    assert x.as_fraction() == Fraction(-3, 4)
    assert sqrt(Fraction(9, 4)).is_rational()
    assert sqrt(Fraction(9, 4)).as_fraction() == Fraction(3, 2)


def test_nested_radical():
    # sqrt(3 + 2*sqrt(2)) = 1 + sqrt(2)
    x = sqrt(3 + 2 * sqrt(2))
    assert x == 1 + sqrt(2)
    y = sqrt(2 + sqrt(3))
    assert y.depth == 2
    assert y * y == 2 + sqrt(3)


def test_errors():
    with pytest.raises(DivisionByZero):
        div(1, sqrt(2) - sqrt(2))
    with pytest.raises(ZeroDivisionError):
        C(1) / 0
    with pytest.raises(NegativeRadicand):
        sqrt(1 - sqrt(3))
    with pytest.raises(ValueError):
        sqrt(-2)


def test_sign_of_close_values():
    # 99/70 approximates sqrt(2) to about 7e-5; a^2 - 2b^2 = 1 pell pair
    assert sign(sqrt(2) - Fraction(99, 70)) == -1
    assert sign(sqrt(2) - Fraction(665857, 470832)) == -1
    assert sign(sqrt(2) - Fraction(886731088897, 627013566048)) == -1
    assert sign(sqrt(3) + sqrt(2) - sqrt(5 + 2 * sqrt(6))) == 0


def test_approx_rounds_half_away_from_zero():
    assert approx(Fraction(1, 8), 2) == "0.13"
    assert approx(Fraction(-1, 8), 2) == "-0.13"
    assert approx(-sqrt(2), 3) == "-1.414"
    assert approx(0, 3) == "0.000"
    assert approx_sig(sqrt(2) * 1000, 4) == Decimal("1414")
    assert approx_sig(Fraction(1, 3000), 3) == Decimal("0.000333")


@pytest.mark.parametrize("text", ["(0)+(-2)*sqrt(-2)", "sqrt(-2)", "1+", "(1", "abc", "sqrt(2", ""])
def test_parse_rejects(text):
    with pytest.raises(UnparseableRadical):
        parse_expr(text)


@settings(max_examples=300, deadline=None)
@given(constructibles(), constructibles(), constructibles())
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x and x * 1 == x
    assert x - x == 0
    if x:
        assert x * x.reciprocal() == 1
        assert (y / x) * x == y


@settings(max_examples=300, deadline=None)
@given(constructibles())
def test_sqrt_squared(x):
    y = x * x
    assert y.sqrt() * y.sqrt() == y
    assert y.sqrt() == abs(x)


@settings(max_examples=300, deadline=None)
@given(constructibles())
def test_expr_round_trip(x):
    assert parse_expr(to_expr(x)) == x
    assert to_expr(parse_expr(to_expr(x))) == to_expr(x)


@settings(max_examples=200, deadline=None)
@given(constructibles(), st.integers(1, 30))
def test_approx_within_bound(x, digits):
    with mpmath.workdps(60):
        ref = mpmath.mpf(approx(x, digits))
        true = mpmath.mpf(str(x.to_decimal(60)))
        assert abs(ref - true) <= mpmath.mpf(10) ** -digits / 2 + mpmath.mpf(10) ** -50


@settings(max_examples=200, deadline=None)
@given(small_rationals, small_rationals)
def test_ordering_matches_fractions(a, b):
    assert (C(a) < C(b)) == (a < b)
    assert sign(C(a) - C(b)) == (a > b) - (a < b)


@settings(max_examples=100, deadline=None)
@given(nonneg_rationals, nonneg_rationals)
def test_sqrt_monotone(a, b):
    assert sign(sqrt(a) - sqrt(b)) == (a > b) - (a < b)


def test_module_functions_agree_with_operators():
    x, y = sqrt(2) + 1, sqrt(3) - Fraction(1, 2)
    assert add(x, y) == x + y
    assert sub(x, y) == x - y
    assert mul(x, y) == x * y
    assert div(x, y) == x / y


def test_interval_oracle_sample():
    rng = random.Random(7)
    trees = [random_tree(rng, 5, [4]) for _ in range(200)]
    checked, inconclusive, _, failures = sign_agreement(trees)
    assert not failures
    assert checked > 150 and inconclusive == 0


def test_oracle_sees_exact_zeros():
    rng = random.Random(3)
    trees = [random_tree(rng, 4, [3]) for _ in range(50)]
    for t in trees:
        try:
            x = eval_exact(t)
        except Exception:
            continue
        assert (x - x).sign() == 0
        assert (x * x - abs(x) * abs(x)).sign() == 0


def test_not_hashable():
    with pytest.raises(TypeError):
        hash(C(1))
