"""Exact scalars: rationals extended by a primitive cube root of unity.

Every coefficient in this package is a QEps value a + b*E where a, b are
rationals and E satisfies E^2 + E + 1 = 0.  Plain rational problems just
keep b = 0; there is no separate rational scalar type to juggle.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["QEps", "ZERO", "ONE", "EPS", "qeps", "parse_scalar", "format_scalar"]


class QEps:
    """Element a + b*E of Q(E), E a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QEps):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QEps(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QEps(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QEps(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QEps(other.a - self.a, other.b - self.b)

    def __mul__(self, other):
        # (a1+b1 E)(a2+b2 E) with E^2 = -1-E.
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bb = b1 * b2
        return QEps(a1 * a2 - bb, a1 * b2 + b1 * a2 - bb)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the norm N(a+bE) = a^2 - ab + b^2."""
        n = self.a * self.a - self.a * self.b + self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(E)")
        return QEps((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def is_rational(self):
        return self.b == 0

    def __repr__(self):
        return f"QEps({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, QEps):
        return x
    if isinstance(x, (int, Fraction)):
        return QEps(x)
    return None


ZERO = QEps(0)
ONE = QEps(1)
EPS = QEps(0, 1)


def qeps(a, b=0):
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    if isinstance(a, str):
        a = Fraction(a)
    if isinstance(b, str):
        b = Fraction(b)
    return QEps(a, b)


_SCALAR_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)"
    r"(?:\s*(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*E)?\s*$"
)
_PURE_E_RE = re.compile(r"^\s*(?P<b>[+-]?\d+(?:/\d+)?)\s*E\s*$")


def parse_scalar(text: str) -> QEps:
    """Parse 'p/q' or 'p/q+r/sE' (also 'p/q-r/sE' and bare 'r/sE')."""
    m = _PURE_E_RE.match(text)
    if m:
        return QEps(0, Fraction(m.group("b")))
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"bad scalar literal: {text!r}")
    a = Fraction(m.group("a"))
    if m.group("b") is None:
        return QEps(a)
    b = Fraction(m.group("b"))
    if m.group("sign") == "-":
        b = -b
    return QEps(a, b)


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def format_scalar(x: QEps) -> str:
    """Canonical text form: 'p/q' when rational, else 'p/q+r/sE' / 'p/q-r/sE'."""
    if x.b == 0:
        return _frac_str(x.a)
    if x.b > 0:
        return f"{_frac_str(x.a)}+{_frac_str(x.b)}E"
    return f"{_frac_str(x.a)}-{_frac_str(-x.b)}E"
