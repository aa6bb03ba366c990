"""Rational approximations of pi recovered from Egyptian sources."""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt

from .exact import Constructible, approx
from .kernel import Point

__all__ = [
    "PI_50",
    "PiApproximation",
    "hemaka_pi",
    "rhind_octagon_pi",
    "shoelace_area",
    "machin_pi",
    "APPROXIMATIONS",
]

# 50 decimal places; checked against machin_pi in the test suite
PI_50 = Decimal("3.14159265358979323846264338327950288419716939937510")


@dataclass(frozen=True)
class PiApproximation:
    name: str
    value: Fraction
    derivation: tuple[str, ...] = field(default=())

    @property
    def decimal_2(self) -> str:
        return approx(Constructible(self.value), 2)

    @property
    def error_vs_pi(self) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = 60
            v = Decimal(self.value.numerator) / Decimal(self.value.denominator)
            return abs(v - PI_50)

    def describe(self) -> list[str]:
        return [
            f"name: {self.name}",
            f"fraction: {self.value.numerator}/{self.value.denominator}",
            f"decimal_2: {self.decimal_2}",
            f"error_vs_pi: {self.error_vs_pi:.6e}",
            "derivation:",
            *(f"  {i}. {step}" for i, step in enumerate(self.derivation, 1)),
        ]


def machin_pi(digits: int) -> Decimal:
    """pi to ``digits`` decimal places from Machin's arctangent formula (integer arithmetic)."""
    guard = 10
    unity = 10 ** (digits + guard)

    def arctan_inv(x: int) -> int:
        total, term, n, sign = 0, unity // x, 1, 1
        x2 = x * x
        while term:
            total += sign * (term // n)
            term //= x2
            n += 2
            sign = -sign
        return total

    pi = 4 * (4 * arctan_inv(5) - arctan_inv(239))
    digits_of_pi = tuple(int(ch) for ch in str(pi // 10**guard))
    return Decimal((0, digits_of_pi, -digits))  # exact, independent of context precision


def hemaka_pi() -> PiApproximation:
    raw = Fraction(66, 21)  # reduces on construction
    return PiApproximation(
        name="hemaka",
        value=raw,
        derivation=(
            "ratio read from the Hemaka game-disk decoration: 66/21",
            f"reduce by gcd(66, 21) = 3: 66/21 = {raw.numerator}/{raw.denominator}",
            f"decimal: {approx(Constructible(raw), 2)}",
        ),
    )


def shoelace_area(vertices: list[Point]) -> Constructible:
    total = Constructible(0)
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        total = total + (a.x * b.y - b.x * a.y)
    return abs(total) / 2


def _corner_cut_octagon(side: int) -> list[Point]:
    t = side // 3
    return [
        Point(t, 0), Point(2 * t, 0), Point(side, t), Point(side, 2 * t),
        Point(2 * t, side), Point(t, side), Point(0, 2 * t), Point(0, t),
    ]


def rhind_octagon_pi(diameter: int = 9) -> PiApproximation:
    """Circle of diameter 9 replaced by the octagon cut from its circumscribed square."""
    octagon = _corner_cut_octagon(diameter)
    area = shoelace_area(octagon).as_fraction()
    root = isqrt(area.numerator // area.denominator)
    side = min((root, root + 1), key=lambda s: abs(s * s - area))
    square = side * side
    value = Fraction(square) / (Fraction(diameter, 2) ** 2)
    t = diameter // 3
    corner = Fraction(t * t, 2)
    return PiApproximation(
        name="rhind",
        value=value,
        derivation=(
            f"square of side {diameter}, area {diameter * diameter}",
            f"cut four corner right triangles with legs {t}: each of area {corner}",
            f"octagon area by shoelace over its eight vertices: {area}",
            f"check: {diameter * diameter} - 4*{corner} = {diameter * diameter - 4 * corner}",
            f"nearest square: {area} ~ {square} = {side}^2",
            f"circle area pi*({diameter}/2)^2 ~ {square}",
            f"pi ~ {square}/({Fraction(diameter, 2) ** 2}) = {value.numerator}/{value.denominator}",
        ),
    )


APPROXIMATIONS = {"hemaka": hemaka_pi, "rhind": rhind_octagon_pi}
