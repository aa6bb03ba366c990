"""Exact arithmetic over the field of constructible numbers.

A value lives in a tower of real quadratic extensions

    Q = F0 < F1 = F0(sqrt d1) < ... < Fk = F(k-1)(sqrt dk)

and is stored as nested coefficient pairs: an element of Fk is ``(a, b)``
meaning ``a + b*sqrt(dk)`` with ``a``, ``b`` in F(k-1); an element of F0 is a
:class:`~fractions.Fraction`.  Every adjoined radicand is positive and not a
square in the field below it, so the coefficients are unique and equality,
sign and square-root extraction are all decidable.

Values are kept with their tower trimmed from the top: when the outermost
``b`` coefficient vanishes the value is demoted to the field below.
"""
from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from math import isqrt
from typing import Union

__all__ = [
    "Constructible",
    "ConstructibleError",
    "DivisionByZero",
    "NegativeRadicand",
    "UnparseableRadical",
    "from_rational",
    "add",
    "sub",
    "mul",
    "div",
    "sqrt",
    "sign",
    "equals",
    "approx",
    "approx_sig",
    "to_expr",
    "parse_expr",
]


class ConstructibleError(ArithmeticError):
    pass


class DivisionByZero(ConstructibleError, ZeroDivisionError):
    pass


class NegativeRadicand(ConstructibleError, ValueError):
    pass


class UnparseableRadical(ConstructibleError, ValueError):
    pass


_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)

# Raw coefficients: Fraction at level 0, (a, b) tuples above.
# A tower is a tuple of raw radicands; tower[i] lives at level i.


def _is_zero(u) -> bool:
    if type(u) is Fraction:
        return u == 0
    return _is_zero(u[0]) and _is_zero(u[1])


def _zero(k):
    z = _ZERO
    for _ in range(k):
        z = (z, z)
    return z


def _const(q: Fraction, k: int):
    z = _ZERO
    for _ in range(k):
        q = (q, z)
        z = (z, z)
    return q


def _pad(u, k_from: int, k_to: int):
    z = _zero(k_from)
    for _ in range(k_from, k_to):
        u = (u, z)
        z = (z, z)
    return u


def _generator(i: int, k: int):
    """sqrt(tower[i]) as a raw element at level k (> i)."""
    g = (_zero(i), _const(_ONE, i))
    return _pad(g, i + 1, k)


def _add(u, v):
    if type(u) is Fraction:
        return u + v
    return (_add(u[0], v[0]), _add(u[1], v[1]))


def _sub(u, v):
    if type(u) is Fraction:
        return u - v
    return (_sub(u[0], v[0]), _sub(u[1], v[1]))


def _neg(u):
    if type(u) is Fraction:
        return -u
    return (_neg(u[0]), _neg(u[1]))


def _scale(u, q: Fraction):
    if type(u) is Fraction:
        return u * q
    return (_scale(u[0], q), _scale(u[1], q))


def _add_rational(u, q: Fraction):
    if type(u) is Fraction:
        return u + q
    return (_add_rational(u[0], q), u[1])


def _rational_part(u) -> Fraction:
    while type(u) is not Fraction:
        u = u[0]
    return u


def _mul(T, k, u, v):
    if k == 0:
        return u * v
    a1, b1 = u
    a2, b2 = v
    j = k - 1
    z1 = _is_zero(b1)
    z2 = _is_zero(b2)
    if z1 and z2:
        return (_mul(T, j, a1, a2), b1)
    if z1:
        return (_mul(T, j, a1, a2), _mul(T, j, a1, b2))
    if z2:
        return (_mul(T, j, a1, a2), _mul(T, j, b1, a2))
    bb = _mul(T, j, _mul(T, j, b1, b2), T[j])
    return (
        _add(_mul(T, j, a1, a2), bb),
        _add(_mul(T, j, a1, b2), _mul(T, j, b1, a2)),
    )


def _inv(T, k, u):
    if k == 0:
        return 1 / u
    a, b = u
    j = k - 1
    if _is_zero(b):
        return (_inv(T, j, a), b)
    norm = _sub(_mul(T, j, a, a), _mul(T, j, _mul(T, j, b, b), T[j]))
    ninv = _inv(T, j, norm)
    return (_mul(T, j, a, ninv), _neg(_mul(T, j, b, ninv)))


def _sign(T, k, u) -> int:
    if k == 0:
        return (u > 0) - (u < 0)
    a, b = u
    j = k - 1
    sb = _sign(T, j, b)
    sa = _sign(T, j, a)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    # opposite signs: compare a^2 with b^2 * d; equality is impossible
    # because d is not a square at level j
    s = _sign(T, j, _sub(_mul(T, j, a, a), _mul(T, j, _mul(T, j, b, b), T[j])))
    return sa * s


def _sqrt_rational(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_in(T, k, u):
    """Nonnegative square root of u inside level k, or None. Requires u >= 0."""
    if k == 0:
        return _sqrt_rational(u)
    a, b = u
    j = k - 1
    if _is_zero(b):
        r = _sqrt_in(T, j, a)
        if r is not None:
            return (r, b)
        r = _sqrt_in(T, j, _mul(T, j, a, _inv(T, j, T[j])))
        if r is not None:
            return (_zero(j), r)
        return None
    norm = _sub(_mul(T, j, a, a), _mul(T, j, _mul(T, j, b, b), T[j]))
    if _sign(T, j, norm) < 0:
        return None
    n = _sqrt_in(T, j, norm)
    if n is None:
        return None
    for s in (n, _neg(n)):
        x2 = _scale(_add(a, s), _HALF)
        if _sign(T, j, x2) <= 0:
            continue
        x = _sqrt_in(T, j, x2)
        if x is None:
            continue
        y = _mul(T, j, b, _inv(T, j, _scale(x, Fraction(2))))
        root = (x, y)
        if _sign(T, k, root) < 0:
            root = _neg(root)
        return root
    return None


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, f) with s*s*f == n, stripping small square factors of n."""
    s = 1
    p = 2
    while p * p <= n and p < 2000:
        pp = p * p
        while n % pp == 0:
            n //= pp
            s *= p
        p += 1 if p == 2 else 2
    r = isqrt(n)
    if r * r == n:
        return s * r, 1
    return s, n


def _embed(src_T, k, u, dst_T, images):
    """Re-express u (level k over src_T) over dst_T given images of generators."""
    kd = len(dst_T)
    if k == 0:
        return _const(u, kd)
    a, b = u
    A = _embed(src_T, k - 1, a, dst_T, images)
    if _is_zero(b):
        return A
    B = _embed(src_T, k - 1, b, dst_T, images)
    return _add(A, _mul(dst_T, kd, B, images[k - 1]))


def _merge(T1, u1, T2, u2):
    """Bring two raw values into one common tower."""
    if T1 == T2:
        return T1, u1, u2
    k1, k2 = len(T1), len(T2)
    if k2 < k1 and T1[:k2] == T2:
        return T1, u1, _pad(u2, k2, k1)
    if k1 < k2 and T2[:k1] == T1:
        return T2, _pad(u1, k1, k2), u2
    shared = 0
    while shared < min(k1, k2) and T1[shared] == T2[shared]:
        shared += 1
    target = T1
    images = [_generator(i, k1) for i in range(shared)]
    for i in range(shared, k2):
        e = _embed(T2, i, T2[i], target, images)
        kt = len(target)
        r = _sqrt_in(target, kt, e)
        if r is None:
            target = target + (e,)
            u1 = _pad(u1, kt, kt + 1)
            images = [_pad(g, kt, kt + 1) for g in images]
            r = _generator(kt, kt + 1)
        images.append(r)
    return target, u1, _embed(T2, k2, u2, target, images)


def _trim(T, u):
    k = len(T)
    while k and _is_zero(u[1]):
        u = u[0]
        k -= 1
    return T[:k], u


RationalLike = Union[int, Fraction]


class Constructible:
    """An exact real number built from rationals by field operations and sqrt.

    Instances are immutable.  Arithmetic operators accept ``int`` and
    :class:`~fractions.Fraction` operands; floats are rejected.
    """

    __slots__ = ("_tower", "_c")

    def __init__(self, value: "RationalLike | Constructible | str" = 0):
        if isinstance(value, Constructible):
            self._tower, self._c = value._tower, value._c
        elif isinstance(value, (int, Fraction)):
            self._tower, self._c = (), Fraction(value)
        elif isinstance(value, str):
            parsed = parse_expr(value)
            self._tower, self._c = parsed._tower, parsed._c
        else:
            raise TypeError(f"cannot make a Constructible from {type(value).__name__}")

    @classmethod
    def _raw(cls, T, u) -> "Constructible":
        T, u = _trim(T, u)
        self = object.__new__(cls)
        self._tower, self._c = T, u
        return self

    @property
    def depth(self) -> int:
        return len(self._tower)

    @property
    def radicands(self) -> tuple["Constructible", ...]:
        return tuple(Constructible._raw(self._tower[:i], d) for i, d in enumerate(self._tower))

    def is_rational(self) -> bool:
        return not self._tower

    def as_fraction(self) -> Fraction:
        if self._tower:
            raise ValueError(f"{self!r} is irrational")
        return self._c

    def sign(self) -> int:
        return _sign(self._tower, len(self._tower), self._c)

    def sqrt(self) -> "Constructible":
        T, u = self._tower, self._c
        k = len(T)
        s = _sign(T, k, u)
        if s < 0:
            raise NegativeRadicand(f"square root of negative number {self!r}")
        if s == 0:
            return self
        r = _sqrt_in(T, k, u)
        if r is not None:
            return Constructible._raw(T, r)
        if k == 0:
            # sqrt(n/m) = sqrt(n*m)/m = (s/m) sqrt(f)
            sq, f = _squarefree_split(u.numerator * u.denominator)
            return Constructible._raw((Fraction(f),), (_ZERO, Fraction(sq, u.denominator)))
        return Constructible._raw(T + (u,), (_zero(k), _const(_ONE, k)))

    # arithmetic

    def _binary(self, other):
        if isinstance(other, Constructible):
            o = other
        elif isinstance(other, (int, Fraction)):
            o = None
        else:
            return None
        if o is None:
            q = Fraction(other)
            return self._tower, self._c, _const(q, len(self._tower))
        return _merge(self._tower, self._c, o._tower, o._c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Constructible._raw(self._tower, _add_rational(self._c, Fraction(other)))
        m = self._binary(other)
        if m is None:
            return NotImplemented
        T, u, v = m
        return Constructible._raw(T, _add(u, v))

    __radd__ = __add__

    def __neg__(self):
        return Constructible._raw(self._tower, _neg(self._c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Constructible._raw(self._tower, _add_rational(self._c, -Fraction(other)))
        m = self._binary(other)
        if m is None:
            return NotImplemented
        T, u, v = m
        return Constructible._raw(T, _sub(u, v))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Constructible._raw(self._tower, _scale(self._c, Fraction(other)))
        m = self._binary(other)
        if m is None:
            return NotImplemented
        T, u, v = m
        return Constructible._raw(T, _mul(T, len(T), u, v))

    __rmul__ = __mul__

    def reciprocal(self) -> "Constructible":
        if _is_zero(self._c):
            raise DivisionByZero("division by exact zero")
        return Constructible._raw(self._tower, _inv(self._tower, len(self._tower), self._c))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by exact zero")
            return Constructible._raw(self._tower, _scale(self._c, 1 / Fraction(other)))
        if not isinstance(other, Constructible):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** -n
        result = Constructible(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # comparison

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction)) and not self._tower:
            c = self._c
            return (c > other) - (c < other)
        d = self - other
        if d is NotImplemented:
            raise TypeError
        return d.sign()

    def __eq__(self, other):
        if not isinstance(other, (Constructible, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __ne__(self, other):
        if not isinstance(other, (Constructible, int, Fraction)):
            return NotImplemented
        return self._cmp(other) != 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # equal values may carry different towers, so no structural hash exists
    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return not _is_zero(self._c)

    def __float__(self):
        return float(approx_sig(self, 17))

    def to_decimal(self, prec: int = 40) -> Decimal:
        """Numeric estimate with roughly ``prec`` significant digits (not exact)."""
        with localcontext() as ctx:
            ctx.prec = prec
            return _decimal_eval(self._tower, len(self._tower), self._c) + 0

    def __repr__(self):
        return f"Constructible('{to_expr(self)}')"

    def __str__(self):
        return to_expr(self)


def _decimal_eval(T, k, u) -> Decimal:
    if k == 0:
        return Decimal(u.numerator) / Decimal(u.denominator)
    a, b = u
    A = _decimal_eval(T, k - 1, a)
    if _is_zero(b):
        return A
    return A + _decimal_eval(T, k - 1, b) * _decimal_eval(T, k - 1, T[k - 1]).sqrt()


def _round_scaled(x: Constructible, k: int) -> int:
    """round(x * 10**k), exact, with ties away from zero."""
    scaled = x * Fraction(10) ** k
    if not scaled._tower:
        q = scaled._c
        n = (abs(q.numerator) * 2 + q.denominator) // (2 * q.denominator)
        return n if q >= 0 else -n
    neg = scaled.sign() < 0
    if neg:
        scaled = -scaled
    est = scaled.to_decimal(30)
    mag = est.adjusted() if est else 0
    est = scaled.to_decimal(max(mag, 0) + 30)
    n = int(est.to_integral_value(rounding=ROUND_HALF_UP))
    # n - 1/2 <= v < n + 1/2
    while (scaled - (n - _HALF)).sign() < 0:
        n -= 1
    while (scaled - (n + _HALF)).sign() >= 0:
        n += 1
    return -n if neg else n


# Module-level operations


def from_rational(q: RationalLike) -> Constructible:
    return Constructible(Fraction(q))


def add(x, y) -> Constructible:
    return Constructible(x) + y


def sub(x, y) -> Constructible:
    return Constructible(x) - y


def mul(x, y) -> Constructible:
    return Constructible(x) * y


def div(x, y) -> Constructible:
    return Constructible(x) / Constructible(y)


def sqrt(x) -> Constructible:
    return Constructible(x).sqrt()


def sign(x) -> int:
    return Constructible(x).sign()


def equals(x, y) -> bool:
    return Constructible(x) == Constructible(y)


def approx(x, digits: int) -> str:
    """Decimal string within 10**-digits of x, rounded half away from zero."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    n = _round_scaled(Constructible(x), digits)
    s = str(abs(n)).rjust(digits + 1, "0")
    out = f"{s[:-digits]}.{s[-digits:]}"
    return f"-{out}" if n < 0 else out


def approx_sig(x, sig: int) -> Decimal:
    """x rounded to ``sig`` significant digits, as an exact Decimal."""
    x = Constructible(x)
    if not x:
        return Decimal(0)
    e = x.to_decimal(30).adjusted()
    for _ in range(4):
        k = sig - 1 - e
        n = _round_scaled(x, k)
        if abs(n) >= 10**sig:
            e += 1
        elif abs(n) < 10 ** (sig - 1):
            e -= 1
        else:
            break
    return Decimal(n).scaleb(-k)


# Radical-expression strings


def _fraction_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _raw_expr(T, k, u) -> str:
    while k > 0 and _is_zero(u[1]):  # coefficient lives in a lower field
        u, k = u[0], k - 1
    if k == 0:
        return _fraction_str(u)
    a, b = u
    return (
        f"({_raw_expr(T, k - 1, a)})+({_raw_expr(T, k - 1, b)})"
        f"*sqrt({_raw_expr(T, k - 1, T[k - 1])})"
    )


def to_expr(x: Constructible) -> str:
    """Serialize as a fully parenthesized radical expression, e.g. ``(1/2)+(3/2)*sqrt(2)``."""
    return _raw_expr(x._tower, len(x._tower), x._c)


class _ExprParser:
    # expr   := term { ("+"|"-") term }
    # term   := factor { ("*"|"/") factor }
    # factor := ("-"|"+") factor | INT | "(" expr ")" | "sqrt" "(" expr ")"

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise UnparseableRadical(f"{msg} at offset {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Constructible:
        value = self.expr()
        if self.peek():
            self.error("trailing input")
        return value

    def expr(self) -> Constructible:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Constructible:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    self.error("division by zero")
                value = value / rhs
        return value

    def factor(self) -> Constructible:
        ch = self.peek()
        if ch in ("-", "+"):
            self.pos += 1
            inner = self.factor()
            return -inner if ch == "-" else inner
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch.isdigit() and ch.isascii():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
                self.pos += 1
            digits = self.text[start:self.pos]
            if len(digits) > 4000:
                self.error("integer literal too long")
            return Constructible(int(digits))
        if self.text.startswith("sqrt", self.pos):
            self.pos += 4
            self.expect("(")
            radicand = self.expr()
            self.expect(")")
            if radicand.sign() < 0:
                self.error("negative radicand")
            return radicand.sqrt()
        self.error("unexpected character" if ch else "unexpected end of input")


def parse_expr(text: str) -> Constructible:
    """Inverse of :func:`to_expr`; accepts any +,-,*,/,sqrt expression over integers."""
    if not isinstance(text, str):
        raise UnparseableRadical(f"expected a string, got {type(text).__name__}")
    try:
        return _ExprParser(text).parse()
    except RecursionError:
        raise UnparseableRadical("expression nested too deeply") from None
