"""Numerical invariants of the harmonic sequence of a full rational curve.

For a full curve f = [F] in CP^n the k-th associated curve is
F ^ F' ^ ... ^ F^(k), whose Plücker coordinates are the (k+1)-minors of the
derivative matrix.  Everything here is computed from those minors:

* ``G_k``  total degree of the common zeros of the level-k minors over the
  whole sphere (the chart z plus the point at infinity),
* ``d_k``  degree of the k-th associated curve,
* ``r_k``  k-th total ramification index, the second difference of ``G``,
* ``map_deg[rho]``  degree of the harmonic map obtained after rho Gauss
  transforms, ``d_rho - d_{rho-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .curve import ProjectiveCurve, chart_flip, is_full
from .errors import BadLevel, InternalInconsistency, NotFull
from .poly import Poly, divexact, gcd, gcd_many, squarefree_decomposition, valuation_at_zero

__all__ = [
    "SequenceInvariants",
    "VerificationReport",
    "level_minors",
    "common_zero_degree",
    "associated_degree",
    "ramification_indices",
    "invariants",
    "verify_plucker",
    "ramification_by_points",
]


@lru_cache(maxsize=512)
def _all_minors(components: tuple[Poly, ...], n: int) -> tuple[tuple[Poly, ...], ...]:
    """Minors of every level, each level in row-lexicographic order.

    A level-k minor is expanded along its last column F^(k), reusing the
    level-(k-1) minors on the complementary rows.
    """
    derivs = []
    for p in components:
        col = [p]
        for _ in range(n):
            col.append(col[-1].derivative())
        derivs.append(col)

    prev = {(i,): components[i] for i in range(n + 1)}
    levels = [tuple(prev[(i,)] for i in range(n + 1))]
    for k in range(1, n + 1):
        cur = {}
        for rows in combinations(range(n + 1), k + 1):
            acc = Poly()
            for t, row in enumerate(rows):
                entry = derivs[row][k]
                if not entry:
                    continue
                sub = prev[rows[:t] + rows[t + 1:]]
                term = entry * sub
                acc = acc + term if (t + k) % 2 == 0 else acc - term
            cur[rows] = acc
        levels.append(tuple(cur[rows] for rows in combinations(range(n + 1), k + 1)))
        prev = cur
    return tuple(levels)


def _check_level(c: ProjectiveCurve, k: int, lo: int = 0) -> None:
    if not lo <= k <= c.n:
        raise BadLevel(f"level {k} outside {lo}..{c.n}")


def _require_full(c: ProjectiveCurve) -> None:
    if not _is_full_cached(c):
        raise NotFull(f"curve {c} lies in a proper projective subspace")


@lru_cache(maxsize=512)
def _is_full_cached(c: ProjectiveCurve) -> bool:
    return is_full(c)


@lru_cache(maxsize=512)
def _flipped(c: ProjectiveCurve) -> ProjectiveCurve:
    return chart_flip(c)


def level_minors(c: ProjectiveCurve, k: int) -> tuple[Poly, ...]:
    """All (k+1)x(k+1) minors of [F, F', ..., F^(k)], rows in lex order."""
    _check_level(c, k)
    _require_full(c)
    return _all_minors(c.components, c.n)[k]


def _minor_gcd(c: ProjectiveCurve, k: int) -> Poly:
    return gcd_many(_all_minors(c.components, c.n)[k])


def common_zero_degree(c: ProjectiveCurve, k: int) -> int:
    """G_k: common zeros of the level-k minors, counted over the whole sphere.

    The flipped chart contributes only its zero at w = 0 (the point z = oo);
    its other zeros are finite points already counted in the z chart.
    """
    _check_level(c, k, lo=1)
    _require_full(c)
    finite = _minor_gcd(c, k).degree
    at_infinity = valuation_at_zero(_minor_gcd(_flipped(c), k))
    return finite + at_infinity


def _reduced_degree(c: ProjectiveCurve, k: int) -> int:
    minors = _all_minors(c.components, c.n)[k]
    g = gcd_many(minors)
    return max(divexact(m, g).degree for m in minors if m)


def associated_degree(c: ProjectiveCurve, k: int) -> int:
    """d_k, computed in both charts; a disagreement is a bug."""
    _check_level(c, k)
    _require_full(c)
    here = _reduced_degree(c, k)
    there = _reduced_degree(_flipped(c), k)
    if here != there:
        raise InternalInconsistency(f"d_{k} is {here} in chart z but {there} in chart w for {c}")
    return here


def _G_sequence(c: ProjectiveCurve) -> list[int]:
    return [0] + [common_zero_degree(c, k) for k in range(1, c.n + 1)]


def _second_differences(G: Sequence[int]) -> list[int]:
    n = len(G) - 1
    out = []
    for k in range(n):
        below = G[k - 1] if k >= 1 else 0
        out.append(G[k + 1] - 2 * G[k] + below)
    return out


def ramification_indices(c: ProjectiveCurve) -> list[int]:
    """r_0..r_{n-1} as second differences of the common-zero degrees."""
    _require_full(c)
    r = _second_differences(_G_sequence(c))
    if any(x < 0 for x in r):
        raise InternalInconsistency(f"negative ramification {r} for {c}")
    return r


@dataclass(frozen=True)
class SequenceInvariants:
    n: int
    deg_f: int
    d: tuple[int, ...]
    r: tuple[int, ...]
    map_deg: tuple[int, ...]
    g: int = 0
    G: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "g": self.g,
            "deg_f": self.deg_f,
            "d": list(self.d),
            "r": list(self.r),
            "map_deg": list(self.map_deg),
        }
        if self.G is not None:
            out["G"] = list(self.G)
        return out

    @classmethod
    def from_dict(cls, doc: dict) -> SequenceInvariants:
        G = doc.get("G")
        return cls(
            n=int(doc["n"]),
            g=int(doc.get("g", 0)),
            deg_f=int(doc["deg_f"]),
            d=tuple(int(x) for x in doc["d"]),
            r=tuple(int(x) for x in doc["r"]),
            map_deg=tuple(int(x) for x in doc["map_deg"]),
            G=None if G is None else tuple(int(x) for x in G),
        )


def _map_degree_formula(deg_f: int, r: Sequence[int], rho: int, g: int) -> int:
    # degree of the rho-th Gauss transform in terms of the directrix data
    return deg_f - sum(r[:rho]) + rho * (2 * g - 2)


def invariants(c: ProjectiveCurve) -> SequenceInvariants:
    _require_full(c)
    n = c.n
    G = _G_sequence(c)
    r = _second_differences(G)
    if any(x < 0 for x in r):
        raise InternalInconsistency(f"negative ramification {r} for {c}")
    d = [associated_degree(c, k) for k in range(n + 1)]
    if d[0] != c.d or d[n] != 0:
        raise InternalInconsistency(f"associated degrees {d} do not start at {c.d} and end at 0")
    map_deg = [d[k] - (d[k - 1] if k else 0) for k in range(n + 1)]
    for rho, m in enumerate(map_deg):
        expected = _map_degree_formula(c.d, r, rho, 0)
        if m != expected:
            raise InternalInconsistency(f"deg f_{rho}: {m} from d-differences, {expected} from ramification")
    return SequenceInvariants(n=n, g=0, deg_f=c.d, d=tuple(d), r=tuple(r), map_deg=tuple(map_deg), G=tuple(G))


@dataclass(frozen=True)
class VerificationReport:
    """Residuals of the Plücker identities; all zero on consistent data.

    ``recursion_residuals[k]`` is the predicted d_{k+1} minus the given one,
    ``ramrelation_residual`` the weighted ramification sum minus its closed
    form, ``degree_residuals[rho]`` the given map degree minus its value from
    the directrix data.
    """

    recursion_residuals: tuple[int, ...]
    ramrelation_residual: int
    degree_residuals: tuple[int, ...]
    shape_errors: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return (
            not self.shape_errors
            and not any(self.recursion_residuals)
            and self.ramrelation_residual == 0
            and not any(self.degree_residuals)
        )

    def to_dict(self) -> dict:
        out = {
            "recursion_residuals": list(self.recursion_residuals),
            "ramrelation_residual": self.ramrelation_residual,
            "degree_residuals": list(self.degree_residuals),
            "pass": self.passed,
        }
        if self.shape_errors:
            out["errors"] = list(self.shape_errors)
        return out


def verify_plucker(inv: SequenceInvariants) -> VerificationReport:
    n, g, d, r = inv.n, inv.g, list(inv.d), list(inv.r)
    problems = []
    if len(d) != n + 1:
        problems.append(f"expected {n + 1} associated degrees, got {len(d)}")
    if len(r) != n:
        problems.append(f"expected {n} ramification indices, got {len(r)}")
    if len(inv.map_deg) != n + 1:
        problems.append(f"expected {n + 1} map degrees, got {len(inv.map_deg)}")
    if problems:
        return VerificationReport((), 0, (), tuple(problems))
    if d[n] != 0:
        problems.append(f"top associated degree must be 0, got {d[n]}")
    if d[0] != inv.deg_f:
        problems.append(f"d_0 = {d[0]} differs from deg f = {inv.deg_f}")

    recursion = []
    for k in range(n):
        below = d[k - 1] if k >= 1 else 0
        predicted = 2 * d[k] - below + (2 * g - 2) - r[k]
        recursion.append(predicted - d[k + 1])
    weighted = sum((n - a) * r[a] for a in range(n))
    ram = weighted - (n + 1) * inv.deg_f - n * (n + 1) * (g - 1)
    degree = [inv.map_deg[rho] - _map_degree_formula(inv.deg_f, r, rho, g) for rho in range(n + 1)]
    return VerificationReport(tuple(recursion), ram, tuple(degree), tuple(problems))


# -- independent oracle: per-point multiplicities ---------------------------


def _split_by_multiplicity(base: Poly, polys: Sequence[Poly]) -> list[tuple[Poly, int]]:
    """Partition the roots of square-free ``base`` by their common multiplicity
    in ``polys``: a root has multiplicity >= m iff every poly and its first
    m - 1 derivatives vanish there."""
    pieces = []
    current = base
    derivs = [p for p in polys if p]
    m = 0
    while current.degree > 0:
        nxt = current
        for p in derivs:
            if nxt.degree == 0:
                break
            nxt = gcd(nxt, p)
        exact = divexact(current, nxt)
        if exact.degree > 0:
            pieces.append((exact, m))
        current = nxt
        derivs = [p.derivative() for p in derivs]
        derivs = [p for p in derivs if p]
        m += 1
        if not derivs and current.degree > 0:
            raise InternalInconsistency("all minors vanish identically on a root")
    return pieces


def _point_classes(levels: Sequence[Sequence[Poly]], base: Poly) -> list[tuple[Poly, list[int]]]:
    """Refine the roots of ``base`` into classes with equal multiplicity profiles."""
    classes = [(base, [])]
    for minors in levels:
        refined = []
        for piece, profile in classes:
            for sub, mult in _split_by_multiplicity(piece, minors):
                refined.append((sub, profile + [mult]))
        classes = refined
    return classes


def _local_ramification(profile: Sequence[int]) -> list[int]:
    r = _second_differences(profile)
    if any(x < 0 for x in r):
        raise InternalInconsistency(f"negative local ramification from multiplicities {list(profile)}")
    return r


def ramification_by_points(c: ProjectiveCurve) -> list[int]:
    """Ramification totals from point-by-point vanishing orders.

    Every ramification point is a root of the Wronskian.  Its square-free
    factors are split into classes of points with equal vanishing orders at
    every level; local indices are second differences of those orders, and
    totals weight each class by its number of points.  The point at infinity
    is treated alone through the flipped chart.
    """
    _require_full(c)
    n = c.n
    totals = [0] * n

    levels = _all_minors(c.components, n)
    wr = levels[n][0]
    bases = [s for s in squarefree_decomposition(wr) if s.degree > 0]
    for base in bases:
        for piece, profile in _point_classes(levels, base):
            for k, x in enumerate(_local_ramification(profile)):
                totals[k] += piece.degree * x

    flipped = _flipped(c)
    w = Poly.monomial(1)
    for piece, profile in _point_classes(_all_minors(flipped.components, n), w):
        for k, x in enumerate(_local_ramification(profile)):
            totals[k] += piece.degree * x
    return totals
