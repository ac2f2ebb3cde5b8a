"""Dense univariate polynomials over Q(i).

Coefficients are stored in ascending powers of the variable.  The zero
polynomial has no coefficients and degree ``NEG_INF``.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .errors import BadReversalBound, DivisionByZero, InexactDivision, UndefinedGcd, UndefinedValuation
from .scalar import ONE, ZERO, GaussianRational, as_scalar, format_scalar

__all__ = [
    "NEG_INF",
    "Poly",
    "gcd",
    "gcd_many",
    "divexact",
    "divmod_poly",
    "compose",
    "reverse",
    "valuation_at_zero",
    "squarefree_decomposition",
]


class _NegInf:
    """Degree of the zero polynomial.

    Orders below every integer but supports no arithmetic, so a stray
    ``deg(0) + 1`` fails loudly instead of producing a number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")


NEG_INF = _NegInf()


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _trusted(cls, coeffs: Sequence[GaussianRational]) -> Poly:
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c=1) -> Poly:
        return cls([0] * e + [c])

    @classmethod
    def z(cls) -> Poly:
        return cls.monomial(1)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __len__(self):
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return _mul(self, other)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = as_scalar(c)
        if c.is_zero():
            return Poly._trusted(())
        return Poly._trusted([c * a for a in self.coeffs])

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus / evaluation -------------------------------------------

    def derivative(self) -> Poly:
        return Poly._trusted([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, Poly):
            return compose(self, x)
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> Poly:
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no monic associate")
        lc = self.coeffs[-1]
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Poly._trusted([c * inv for c in self.coeffs])

    def conjugate(self) -> Poly:
        return Poly._trusted([c.conjugate() for c in self.coeffs])

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = format_scalar(c) if c.is_real() or not c.re else f"({format_scalar(c)})"
            elif c == ONE:
                body = mono
            elif c == -ONE:
                body = "-" + mono
            elif not c.re and abs(c.im) == 1:
                body = f"{'-' if c.im < 0 else ''}i*{mono}"
            elif c.is_real() or not c.re:
                body = f"{format_scalar(c)}*{mono}"
            else:
                body = f"({format_scalar(c)})*{mono}"
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _coerce(x):
    if isinstance(x, Poly):
        return x
    try:
        return Poly.constant(as_scalar(x))
    except TypeError:
        return NotImplemented


def _mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Poly._trusted(())
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return Poly._trusted(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if q.is_zero():
        raise DivisionByZero("polynomial division by zero")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    if len(rem) - 1 < dq:
        return Poly._trusted(()), p
    inv_lc = q.coeffs[-1].inverse()
    quot = [ZERO] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c.is_zero():
            continue
        c = c * inv_lc
        quot[k - dq] = c
        for j, b in enumerate(q.coeffs):
            rem[k - dq + j] = rem[k - dq + j] - c * b
    return Poly._trusted(quot), Poly._trusted(rem[:dq])


def divexact(p: Poly, q: Poly) -> Poly:
    """Return p / q, refusing if q does not divide p."""
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise InexactDivision(f"({p}) is not divisible by ({q})")
    return quot


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q(i) by Euclid with monic remainders."""
    if p.is_zero() and q.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    a = p.monic() if p else p
    b = q.monic() if q else q
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return Poly.constant(1)
        _, r = divmod_poly(a, b)
        a, b = b, (r.monic() if r else r)
    return a


def gcd_many(polys: Iterable[Poly]) -> Poly:
    nonzero = sorted((p for p in polys if p), key=len)
    if not nonzero:
        raise UndefinedGcd("gcd of zero polynomials is undefined")
    # cheap factors first keep the intermediate gcd small
    return reduce(lambda g, p: g if len(g) == 1 else gcd(g, p), nonzero[1:], nonzero[0].monic())


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(z)) by Horner's scheme."""
    acc = Poly._trusted(())
    for c in reversed(p.coeffs):
        acc = acc * q + Poly._trusted((c,))
    return acc


def reverse(p: Poly, d: int) -> Poly:
    """w^d * p(1/w): the coefficient list reversed inside length d + 1."""
    if p.degree > d:
        raise BadReversalBound(f"reversal bound {d} below degree {p.degree}")
    padded = list(p.coeffs) + [ZERO] * (d + 1 - len(p.coeffs))
    return Poly._trusted(padded[::-1])


def valuation_at_zero(p: Poly) -> int:
    """Multiplicity of the root z = 0."""
    if p.is_zero():
        raise UndefinedValuation("valuation of the zero polynomial")
    for k, c in enumerate(p.coeffs):
        if not c.is_zero():
            return k
    raise AssertionError("unreachable")


def squarefree_decomposition(p: Poly) -> list[Poly]:
    """Yun's algorithm.

    Returns ``[s1, s2, ...]`` with ``monic(p) == s1 * s2**2 * s3**3 * ...``;
    each ``s_m`` is monic, square-free, and pairwise coprime with the others.
    """
    if p.is_zero():
        raise UndefinedValuation("square-free decomposition of zero")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = gcd(p, dp)
    b = divexact(p, a)
    c = divexact(dp, a)
    out = []
    while b.degree > 0:
        d = c - b.derivative()
        s = gcd(b, d) if d else b
        out.append(s)
        b = divexact(b, s)
        c = divexact(d, s) if d else d
    return out
