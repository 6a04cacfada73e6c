"""Exact scalar values used in group coordinates and cut anchors.

Two scalar kinds circulate in the package: plain ``fractions.Fraction``
and ``Sqrt2`` (an element a + b*sqrt(2) of the real quadratic field
Q(sqrt 2), kept exact).  The two interoperate through the usual
arithmetic/comparison operators, so code downstream never needs to
branch on the kind.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Scalar = Union[Fraction, "Sqrt2"]


class Sqrt2:
    """Exact a + b*sqrt(2) with rational a, b and decidable sign."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Sqrt2 values are immutable")

    # -- sign and comparisons ------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against 2 b^2 (sqrt 2 is irrational,
        # so a + b*sqrt2 = 0 only when a = b = 0)
        if a > 0:  # b < 0
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    @staticmethod
    def _coerce(other) -> "Sqrt2 | None":
        if isinstance(other, Sqrt2):
            return other
        if isinstance(other, (int, Fraction)):
            return Sqrt2(other, 0)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, "sqrt2"))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare Sqrt2 with {type(other).__name__}")
        return Sqrt2(self.a - o.a, self.b - o.b).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return Sqrt2(-self.a, -self.b)

    def __mul__(self, other):
        # rational scaling only; full field product is never needed here
        if isinstance(other, (int, Fraction)):
            return _normalize(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"Sqrt2({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_scalar(self)


def _normalize(a: Fraction, b: Fraction) -> Scalar:
    return a if b == 0 else Sqrt2(a, b)


SQRT2 = Sqrt2(0, 1)


def is_rational(x: Scalar) -> bool:
    return not isinstance(x, Sqrt2) or x.b == 0


def as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Sqrt2):
        if x.b != 0:
            raise ValueError(f"{x} is irrational")
        return x.a
    return Fraction(x)


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, Sqrt2):
        return x.sign()
    return (x > 0) - (x < 0)


def scalar_cmp(x: Scalar, y: Scalar) -> int:
    if x == y:
        return 0
    return -1 if x < y else 1


def scalar_floor(x: Scalar) -> int:
    """Exact floor, also for irrational a + b*sqrt2 values."""
    if not isinstance(x, Sqrt2):
        f = Fraction(x)
        return f.numerator // f.denominator
    if x.b == 0:
        return x.a.numerator // x.a.denominator
    # x = (A/B) + (C/D) sqrt2 = (AD + CB*sqrt2) / (BD) with BD > 0.
    a_num, a_den = x.a.numerator, x.a.denominator
    b_num, b_den = x.b.numerator, x.b.denominator
    u = a_num * b_den
    t = b_num * a_den
    m = a_den * b_den
    # floor(t*sqrt2): t*sqrt2 = sign(t) * sqrt(2 t^2), irrational since t != 0
    s = isqrt(2 * t * t)
    ft = s if t > 0 else -s - 1
    # t*sqrt2 has fractional part strictly inside (0, 1), so
    # floor((u + t*sqrt2)/m) = (u + floor(t*sqrt2)) // m.
    return (u + ft) // m


def format_scalar(x: Scalar) -> str:
    if not isinstance(x, Sqrt2) or x.b == 0:
        return str(as_fraction(x))
    a, b = x.a, x.b
    if b == 1:
        bs = "r2"
    elif b == -1:
        bs = "-r2"
    else:
        bs = f"{b}r2"
    if a == 0:
        return bs
    return f"{a}+{bs}" if b > 0 else f"{a}{bs}"


def parse_scalar(text: str) -> Scalar:
    """Parse ``a``, ``br2``, ``a+br2`` or ``a-br2`` (b may be a fraction)."""
    s = text.strip().replace(" ", "")
    if "r2" not in s:
        return Fraction(s)
    head, _, _ = s.partition("r2")
    # split head into rational part and sqrt2 coefficient
    cut = -1
    for i in range(1, len(head)):
        if head[i] in "+-" and head[i - 1] not in "+-/":
            cut = i
    if cut < 0:
        a_txt, b_txt = "0", head
    else:
        a_txt, b_txt = head[:cut], head[cut:]
    if b_txt in ("", "+"):
        b = Fraction(1)
    elif b_txt == "-":
        b = Fraction(-1)
    else:
        b = Fraction(b_txt)
    a = Fraction(a_txt) if a_txt not in ("", "+") else Fraction(0)
    return _normalize(a, b)
