"""Holomorphic maps S^2 -> CP^n given by polynomial homogeneous coordinates.

A curve is stored in the affine chart z of the sphere; the chart at infinity
(w = 1/z) is obtained by coefficient reversal, see :func:`chart_flip`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityMismatch, DegenerateCurve, DegenerateMap, InternalInconsistency
from .poly import Poly, divexact, gcd, gcd_many, reverse
from .scalar import ZERO

__all__ = [
    "ProjectiveCurve",
    "RationalSelfMap",
    "make_curve",
    "is_full",
    "wronskian",
    "coefficient_rank",
    "chart_flip",
    "precompose",
    "rational_normal_curve",
    "curve_from_coefficients",
]


@dataclass(frozen=True)
class ProjectiveCurve:
    """Normalized representative ``[F_0 : ... : F_n]``.

    Build through :func:`make_curve`; the constructor does not normalize.
    """

    n: int
    components: tuple[Poly, ...]

    @property
    def d(self) -> int:
        return max(p.degree for p in self.components if p)

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.components) + "]"


@dataclass(frozen=True)
class RationalSelfMap:
    """z -> numerator(z) / denominator(z), reduced, of degree >= 1."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if num.is_zero() and den.is_zero():
            raise DegenerateMap("0/0 is not a map")
        if den.is_zero():
            raise DegenerateMap("denominator is zero")
        g = gcd(num, den)
        if g.degree > 0:
            num, den = divexact(num, g), divexact(den, g)
        # canonical scaling: monic denominator
        lc_inv = den.leading().inverse()
        num, den = num.scale(lc_inv), den.scale(lc_inv)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)
        if self.degree < 1:
            raise DegenerateMap("constant map has degree 0")

    @property
    def degree(self) -> int:
        return max(self.numerator.degree, self.denominator.degree, 0)

    @classmethod
    def power(cls, k: int) -> RationalSelfMap:
        """eta_k(z) = z^k."""
        return cls(Poly.monomial(k), Poly.constant(1))

    def __str__(self):
        if self.denominator == Poly.constant(1):
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (list, tuple)):
        return Poly(p)
    return Poly.constant(p)


def make_curve(n: int, raw: Sequence) -> ProjectiveCurve:
    if n < 1:
        raise ArityMismatch(f"target dimension must be >= 1, got {n}")
    comps = [_as_poly(p) for p in raw]
    if len(comps) != n + 1:
        raise ArityMismatch(f"CP^{n} needs {n + 1} components, got {len(comps)}")
    if all(p.is_zero() for p in comps):
        raise DegenerateCurve("all components vanish identically")
    g = gcd_many(comps)
    if g.degree > 0:
        comps = [divexact(p, g) for p in comps]
    return ProjectiveCurve(n, tuple(comps))


def wronskian(c: ProjectiveCurve) -> Poly:
    """det[F, F', ..., F^(n)] with rows in component order."""
    # imported lazily: the minor machinery lives with the harmonic sequence
    from .sequence import _all_minors

    return _all_minors(c.components, c.n)[c.n][0]


def coefficient_rank(c: ProjectiveCurve) -> int:
    """Rank over Q(i) of the (n+1) x (d+1) coefficient matrix."""
    rows = [[p[k] for k in range(c.d + 1)] for p in c.components]
    rank, col = 0, 0
    width = c.d + 1
    while rank < len(rows) and col < width:
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f.is_zero():
                continue
            f = f * inv
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def is_full(c: ProjectiveCurve) -> bool:
    """Image spans CP^n; checked by the Wronskian and the coefficient rank."""
    by_wronskian = not wronskian(c).is_zero()
    by_rank = coefficient_rank(c) == c.n + 1
    if by_wronskian != by_rank:
        raise InternalInconsistency(f"Wronskian and rank disagree on fullness of {c}")
    return by_wronskian


def chart_flip(c: ProjectiveCurve) -> ProjectiveCurve:
    """The same map written in the coordinate w = 1/z."""
    d = c.d
    return make_curve(c.n, [reverse(p, d) for p in c.components])


def precompose(c: ProjectiveCurve, m: RationalSelfMap) -> ProjectiveCurve:
    """f o m, with denominators cleared: q^d * F_i(p/q)."""
    if not isinstance(m, RationalSelfMap):
        raise DegenerateMap(f"expected a RationalSelfMap, got {type(m).__name__}")
    d = c.d
    p, q = m.numerator, m.denominator
    p_pows = [Poly.constant(1)]
    q_pows = [Poly.constant(1)]
    for _ in range(d):
        p_pows.append(p_pows[-1] * p)
        q_pows.append(q_pows[-1] * q)
    out = []
    for comp in c.components:
        acc = Poly()
        for j, a in enumerate(comp.coeffs):
            if a != ZERO:
                acc = acc + (p_pows[j] * q_pows[d - j]).scale(a)
        out.append(acc)
    return make_curve(c.n, out)


def rational_normal_curve(n: int) -> ProjectiveCurve:
    """[1, z, ..., z^n]."""
    return make_curve(n, [Poly.monomial(k) for k in range(n + 1)])


def curve_from_coefficients(n: int, rows: Sequence[Sequence]) -> ProjectiveCurve:
    """Convenience: components given as ascending coefficient lists."""
    return make_curve(n, [Poly(r) for r in rows])
