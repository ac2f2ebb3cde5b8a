"""Exact Gaussian rationals a + b*i with a, b in Q.

Rationals are ``fractions.Fraction``; they are always stored reduced with a
positive denominator, which is exactly the invariant we need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, LiteralSyntaxError

__all__ = ["GaussianRational", "ZERO", "ONE", "I", "as_scalar", "parse_scalar"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class GaussianRational:
    """Immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> GaussianRational:
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)")
        if not self.im:
            return GaussianRational._raw(1 / self.re, self.im)
        n = self.norm()
        return GaussianRational._raw(self.re / n, -self.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational._raw(Fraction(0), Fraction(0))
ONE = GaussianRational._raw(Fraction(1), Fraction(0))
I = GaussianRational._raw(Fraction(0), Fraction(1))


def as_scalar(x, strict: bool = True):
    """Coerce ints, Fractions and Gaussian rationals to ``GaussianRational``.

    Floats and complex numbers are refused: nothing here is ever approximated.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        pass
    elif isinstance(x, int):
        return GaussianRational._raw(Fraction(x), Fraction(0))
    elif isinstance(x, Fraction):
        return GaussianRational._raw(x, Fraction(0))
    if strict:
        raise TypeError(f"cannot use {x!r} as an exact scalar")
    return NotImplemented


def format_scalar(x: GaussianRational) -> str:
    """Render in the literal syntax accepted by :func:`parse_scalar`."""
    if not x.im:
        return str(x.re)
    im = f"{x.im}*i"
    if not x.re:
        return im
    sign = "-" if x.im < 0 else "+"
    return f"{x.re}{sign}{abs(x.im)}*i"


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"""^(?:
        (?P<re_sign>[+-]?)(?P<re>{_RAT})
        (?:(?P<im_sign>[+-])(?:(?P<im>{_RAT})\*)?i)?
      |
        (?P<pure_sign>[+-]?)(?:(?P<pure>{_RAT})\*)?i
    )$""",
    re.VERBOSE,
)


def _parse_rat(sign: str, text: str | None) -> Fraction:
    value = Fraction(text) if text is not None else Fraction(1)
    return -value if sign == "-" else value


def parse_scalar(text) -> GaussianRational:
    """Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"c/d*i"`` or a plain integer.

    Whitespace is ignored.  A JSON integer is accepted as-is.

    >>> parse_scalar("1/2 - 3*i")
    GaussianRational(1/2, -3)
    """
    if isinstance(text, bool):
        raise LiteralSyntaxError(f"not a scalar literal: {text!r}")
    if isinstance(text, int):
        return as_scalar(text)
    if not isinstance(text, str):
        raise LiteralSyntaxError(f"not a scalar literal: {text!r}")
    compact = "".join(text.split())
    m = _SCALAR_RE.match(compact)
    if m is None:
        raise LiteralSyntaxError(f"not a scalar literal: {text!r}")
    try:
        if m.group("re") is not None:
            re_part = _parse_rat(m.group("re_sign"), m.group("re"))
            im_part = Fraction(0)
            if m.group("im_sign"):
                im_part = _parse_rat(m.group("im_sign"), m.group("im"))
        else:
            re_part = Fraction(0)
            im_part = _parse_rat(m.group("pure_sign"), m.group("pure"))
    except ZeroDivisionError:
        raise LiteralSyntaxError(f"zero denominator in {text!r}") from None
    return GaussianRational._raw(re_part, im_part)
