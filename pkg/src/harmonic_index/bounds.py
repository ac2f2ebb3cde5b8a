"""Lower bounds on the index of complex isotropic harmonic maps into CP^n.

A non-±-holomorphic complex isotropic map phi: M_g -> CP^n is the rho-th
Gauss transform of a full holomorphic map f (its directrix), 0 < rho < n.
Three bounds are evaluated from (n, g, deg f, rho, r_0..r_{rho-1}):

* ``baseline``   (n+1) deg(phi) + n(1-g), the classical estimate;
* ``theorem``    (n+1) deg(f) - sum (n-a) r_a + (2n rho - rho^2 + 2 rho - n)(g-1);
* ``corollary``  (n+1) deg(phi) + (n + rho^2)(1-g) + sum (a+1) r_a.

The last two are the same number written in terms of deg f and deg phi; the
code evaluates both and treats a mismatch as a bug.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

from .errors import InternalInconsistency, InvalidDirectrix, NotApplicable
from .sequence import SequenceInvariants

__all__ = [
    "DirectrixInvariants",
    "BoundReport",
    "deg_phi",
    "baseline_bound",
    "theorem_bound",
    "corollary_bound",
    "improvement",
    "ramrelation_check",
    "bound_report",
    "cp2_bounds",
    "STABLE_NOTE",
]

STABLE_NOTE = "±-holomorphic: stable, Index 0"


def ramrelation_check(n: int, g: int, deg_f: int, r_full) -> bool:
    """Weighted Plücker relation sum (n-a) r_a = (n+1) deg f + n(n+1)(g-1)."""
    r_full = list(r_full)
    if len(r_full) != n:
        raise InvalidDirectrix(f"need {n} ramification indices, got {len(r_full)}")
    return sum((n - a) * r for a, r in enumerate(r_full)) == (n + 1) * deg_f + n * (n + 1) * (g - 1)


@dataclass(frozen=True)
class DirectrixInvariants:
    n: int
    g: int
    deg_f: int
    rho: int
    r_prefix: tuple[int, ...]
    r_full: tuple[int, ...] | None = None
    # provenance of fullness / complex isotropy: "construction" or "user-asserted"
    assumptions: str = "user-asserted"

    def __post_init__(self):
        object.__setattr__(self, "r_prefix", tuple(int(x) for x in self.r_prefix))
        if self.r_full is not None:
            object.__setattr__(self, "r_full", tuple(int(x) for x in self.r_full))
        if self.n < 1:
            raise InvalidDirectrix(f"n must be >= 1, got {self.n}")
        if self.g < 0:
            raise InvalidDirectrix(f"genus must be >= 0, got {self.g}")
        if not 0 <= self.rho <= self.n:
            raise InvalidDirectrix(f"rho must lie in 0..{self.n}, got {self.rho}")
        if len(self.r_prefix) != self.rho:
            raise InvalidDirectrix(f"need r_0..r_{self.rho - 1} ({self.rho} values), got {len(self.r_prefix)}")
        if any(x < 0 for x in self.r_prefix):
            raise InvalidDirectrix(f"ramification indices must be >= 0: {self.r_prefix}")
        if self.r_full is not None:
            if any(x < 0 for x in self.r_full):
                raise InvalidDirectrix(f"ramification indices must be >= 0: {self.r_full}")
            if len(self.r_full) != self.n:
                raise InvalidDirectrix(f"full ramification needs {self.n} values, got {len(self.r_full)}")
            if self.r_full[: self.rho] != self.r_prefix:
                raise InvalidDirectrix("r_full does not extend r_prefix")
            if not ramrelation_check(self.n, self.g, self.deg_f, self.r_full):
                raise InvalidDirectrix(
                    f"r = {list(self.r_full)} violates the weighted Plücker relation "
                    f"for n={self.n}, g={self.g}, deg f={self.deg_f}"
                )

    @property
    def applicable(self) -> bool:
        return 0 < self.rho < self.n

    @classmethod
    def from_ramification(cls, n, g, deg_f, rho, r, **kw) -> DirectrixInvariants:
        """Accept either r_0..r_{rho-1} or the full r_0..r_{n-1}."""
        r = tuple(r)
        if len(r) == n and n != rho:
            return cls(n, g, deg_f, rho, r[:rho], r, **kw)
        return cls(n, g, deg_f, rho, r, **kw)

    @classmethod
    def from_sequence(cls, inv: SequenceInvariants, rho: int) -> DirectrixInvariants:
        return cls(inv.n, inv.g, inv.deg_f, rho, inv.r[:rho], inv.r, assumptions="construction")

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "g": self.g,
            "deg_f": self.deg_f,
            "rho": self.rho,
            "r_prefix": list(self.r_prefix),
            "assumptions": self.assumptions,
        }
        if self.r_full is not None:
            out["r_full"] = list(self.r_full)
        return out


def _require_applicable(inv: DirectrixInvariants) -> None:
    if not inv.applicable:
        raise NotApplicable(f"rho = {inv.rho} gives a ±-holomorphic map (stable, Index 0)")


def deg_phi(inv: DirectrixInvariants) -> int:
    return inv.deg_f - sum(inv.r_prefix) + inv.rho * (2 * inv.g - 2)


def baseline_bound(inv: DirectrixInvariants) -> int:
    _require_applicable(inv)
    return deg_phi(inv) * (inv.n + 1) + inv.n * (1 - inv.g)


def theorem_bound(inv: DirectrixInvariants) -> int:
    _require_applicable(inv)
    n, rho, g = inv.n, inv.rho, inv.g
    weighted = sum((n - a) * r for a, r in enumerate(inv.r_prefix))
    return (n + 1) * inv.deg_f - weighted + (2 * n * rho - rho * rho + 2 * rho - n) * (g - 1)


def _gain(inv: DirectrixInvariants) -> int:
    return sum((a + 1) * r for a, r in enumerate(inv.r_prefix))


def corollary_bound(inv: DirectrixInvariants) -> int:
    _require_applicable(inv)
    n, rho, g = inv.n, inv.rho, inv.g
    value = (n + 1) * deg_phi(inv) + (n + rho * rho) * (1 - g) + _gain(inv)
    if value != theorem_bound(inv):
        raise InternalInconsistency(f"deg-phi form {value} != deg-f form {theorem_bound(inv)} for {inv}")
    return value


def improvement(inv: DirectrixInvariants) -> tuple[int, bool]:
    """How far the theorem bound exceeds the baseline, and whether it does."""
    _require_applicable(inv)
    delta = _gain(inv) - inv.rho * inv.rho * (inv.g - 1)
    if delta != theorem_bound(inv) - baseline_bound(inv):
        raise InternalInconsistency(f"improvement {delta} disagrees with theorem - baseline for {inv}")
    return delta, delta > 0


@dataclass(frozen=True)
class BoundReport:
    inputs: DirectrixInvariants
    deg_phi: int
    applicable: bool
    baseline: int | None = None
    theorem: int | None = None
    corollary: int | None = None
    improvement: int | None = None
    improves: bool | None = None
    vacuous: bool | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.applicable:
            return
        if self.theorem != self.corollary:
            raise InternalInconsistency(f"theorem {self.theorem} != corollary {self.corollary}")
        gain = _gain(self.inputs) - self.inputs.rho ** 2 * (self.inputs.g - 1)
        if self.improvement != self.theorem - self.baseline or self.improvement != gain:
            raise InternalInconsistency(f"improvement {self.improvement} inconsistent for {self.inputs}")

    def to_dict(self) -> dict:
        out = asdict(self)
        out["inputs"] = self.inputs.to_dict()
        out["notes"] = list(self.notes)
        return out


def bound_report(inv: DirectrixInvariants) -> BoundReport:
    notes = []
    if inv.assumptions != "construction":
        notes.append("fullness and complex isotropy are user-asserted")
        if inv.g >= 2:
            notes.append("arithmetic consistency checked only; existence of the directrix is not certified")
    if not inv.applicable:
        return BoundReport(inputs=inv, deg_phi=deg_phi(inv), applicable=False, notes=tuple([STABLE_NOTE] + notes))
    theorem = theorem_bound(inv)
    delta, improves = improvement(inv)
    if theorem <= 0:
        notes.append("vacuous: bound <= 0")
    return BoundReport(
        inputs=inv,
        deg_phi=deg_phi(inv),
        applicable=True,
        baseline=baseline_bound(inv),
        theorem=theorem,
        corollary=corollary_bound(inv),
        improvement=delta,
        improves=improves,
        vacuous=theorem <= 0,
        notes=tuple(notes),
    )


def cp2_bounds(inv: DirectrixInvariants) -> BoundReport:
    """The CP^2, rho = 1 specialization on the sphere (g=0) or torus (g=1)."""
    if inv.n != 2 or inv.rho != 1 or inv.g not in (0, 1):
        raise NotApplicable(f"closed CP^2 forms need n=2, rho=1, g in {{0,1}}; got {inv}")
    r0 = inv.r_prefix[0]
    shift = 3 if inv.g == 0 else 0
    f_form = 3 * inv.deg_f - 2 * r0 - shift
    phi_form = 3 * deg_phi(inv) + r0 + shift
    report = bound_report(inv)
    if not f_form == phi_form == report.theorem == report.corollary:
        raise InternalInconsistency(
            f"CP^2 closed forms {f_form}, {phi_form} disagree with general bound {report.theorem}"
        )
    expected_gain = r0 + 1 if inv.g == 0 else r0
    if report.improvement != expected_gain:
        raise InternalInconsistency(f"CP^2 improvement {report.improvement} != {expected_gain}")
    surface = "sphere" if inv.g == 0 else "torus"
    form = f"3 deg f - 2 r_0{' - 3' if shift else ''} = 3 deg phi + r_0{' + 3' if shift else ''} = {f_form}"
    return replace(report, notes=report.notes + (f"CP^2 {surface}: {form}",))
