from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

import mpmath

from compass_grid.ancient_ratios import (
    APPROXIMATIONS,
    PI_50,
    hemaka_pi,
    machin_pi,
    rhind_octagon_pi,
    shoelace_area,
)
from compass_grid.kernel import Point


def test_pi_constant_against_two_oracles():
    assert PI_50 == machin_pi(50)
    with mpmath.workdps(60):
        # PI_50 is truncated, not rounded
        assert mpmath.nstr(mpmath.pi, 58, strip_zeros=False).startswith(str(PI_50))


def test_hemaka():
    h = hemaka_pi()
    assert h.value == Fraction(22, 7)
    assert h.decimal_2 == "3.14"
    assert any("66/21" in s for s in h.derivation)
    assert Decimal("0.00126") < h.error_vs_pi < Decimal("0.00127")


def test_rhind():
    r = rhind_octagon_pi()
    assert r.value == Fraction(256, 81)
    assert r.decimal_2 == "3.16"
    assert any("63" in s and "shoelace" in s for s in r.derivation)


def test_shoelace():
    assert shoelace_area([Point(0, 0), Point(4, 0), Point(4, 3)]) == 6
    assert shoelace_area([Point(0, 0), Point(0, 2), Point(2, 2), Point(2, 0)]) == 4


def test_describe_lists_everything():
    for make in APPROXIMATIONS.values():
        text = "\n".join(make().describe())
        for key in ("name:", "fraction:", "decimal_2:", "error_vs_pi:", "derivation:"):
            assert key in text
