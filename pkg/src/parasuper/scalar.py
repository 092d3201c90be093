"""Exact arithmetic in the quadratic field Q(sqrt 2)."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class QSqrt2:
    """The number ``rat + irr*sqrt(2)`` with rational ``rat`` and ``irr``.

    Stored internally as integers ``(a + b*sqrt2) / d`` with ``d > 0`` and
    ``gcd(a, b, d) == 1``, which makes equality and hashing exact.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, rat: int | Fraction | str = 0, irr: int | Fraction | str = 0) -> None:
        r = Fraction(rat)
        s = Fraction(irr)
        d = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        self._set(r.numerator * (d // r.denominator), s.numerator * (d // s.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> QSqrt2:
        obj = object.__new__(cls)
        if d == 1:
            obj._a, obj._b, obj._d = a, b, 1
        else:
            obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value: QSqrt2 | int | Fraction) -> QSqrt2:
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Rational):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an element of Q(sqrt2)")

    @property
    def rat(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def irr(self) -> Fraction:
        return Fraction(self._b, self._d)

    def conjugate(self) -> QSqrt2:
        return QSqrt2._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - 2*irr**2``."""
        return Fraction(self._a * self._a - 2 * self._b * self._b, self._d * self._d)

    def is_rational(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt2):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __neg__(self) -> QSqrt2:
        return QSqrt2._raw(-self._a, -self._b, self._d)

    def __pos__(self) -> QSqrt2:
        return self

    def __add__(self, other: QSqrt2 | int | Fraction) -> QSqrt2:
        if not isinstance(other, QSqrt2):
            try:
                other = QSqrt2.coerce(other)
            except TypeError:
                return NotImplemented
        if self._d == other._d:
            return QSqrt2._raw(self._a + other._a, self._b + other._b, self._d)
        return QSqrt2._raw(
            self._a * other._d + other._a * self._d,
            self._b * other._d + other._b * self._d,
            self._d * other._d,
        )

    __radd__ = __add__

    def __sub__(self, other: QSqrt2 | int | Fraction) -> QSqrt2:
        if not isinstance(other, QSqrt2):
            try:
                other = QSqrt2.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> QSqrt2:
        return QSqrt2.coerce(other) - self

    def __mul__(self, other: QSqrt2 | int | Fraction) -> QSqrt2:
        if isinstance(other, int):
            return QSqrt2._raw(self._a * other, self._b * other, self._d)
        if not isinstance(other, QSqrt2):
            try:
                other = QSqrt2.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QSqrt2._raw(a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> QSqrt2:
        if not self:
            raise ZeroDivisionError("zero has no inverse in Q(sqrt2)")
        # 1/(a + b r)/d = d (a - b r) / (a^2 - 2 b^2)
        n = self._a * self._a - 2 * self._b * self._b
        if n < 0:
            return QSqrt2._raw(-self._d * self._a, self._d * self._b, -n)
        return QSqrt2._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other: QSqrt2 | int | Fraction) -> QSqrt2:
        if not isinstance(other, QSqrt2):
            try:
                other = QSqrt2.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int | Fraction) -> QSqrt2:
        return QSqrt2.coerce(other) * self.inverse()

    def __float__(self) -> float:
        return (self._a + self._b * 2**0.5) / self._d

    def __repr__(self) -> str:
        return f"QSqrt2({str(self.rat)!r}, {str(self.irr)!r})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self.rat)
        irr = self.irr
        if self._a == 0:
            return f"{irr}*sqrt2" if irr not in (1, -1) else ("sqrt2" if irr == 1 else "-sqrt2")
        sign = "+" if irr > 0 else "-"
        mag = abs(irr)
        tail = "sqrt2" if mag == 1 else f"{mag}*sqrt2"
        return f"{self.rat}{sign}{tail}"

    def to_json(self) -> dict[str, str]:
        r, s = self.rat, self.irr
        return {"rat": f"{r.numerator}/{r.denominator}", "sqrt2": f"{s.numerator}/{s.denominator}"}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> QSqrt2:
        return cls(_parse_fraction(data["rat"]), _parse_fraction(data["sqrt2"]))


def _parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    return Fraction(int(num), int(den) if den else 1)


ZERO = QSqrt2._raw(0, 0, 1)
ONE = QSqrt2._raw(1, 0, 1)
SQRT2 = QSqrt2._raw(0, 1, 1)
