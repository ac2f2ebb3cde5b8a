"""Built-in worked examples with expected invariants and bounds.

Expected values are closed forms in the family parameter, written out here
independently of the computation they are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import DirectrixInvariants, bound_report, cp2_bounds
from .curve import make_curve, precompose, rational_normal_curve
from .poly import Poly
from .sequence import invariants, ramification_by_points, verify_plucker
from .serialize import curve_to_document, parse_map

__all__ = ["ExampleRecord", "Row", "CORPUS", "build_corpus", "run_example", "run_corpus"]

VERONESE = [[1], [0, 1], [0, 0, 1]]
CUBIC = [[1], [0, 1, 0, 1], [0, 0, 1]]


@dataclass(frozen=True)
class ExampleRecord:
    name: str
    construction: dict
    # field -> (expected value, where it comes from)
    expected: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Row:
    example: str
    field: str
    expected: object
    actual: object
    source: str

    @property
    def match(self) -> bool:
        return self.expected == self.actual


def _sphere_family(name: str, rows, k: int, deg: int, phi: int, src: str) -> ExampleRecord:
    r0 = 2 * (k - 1)
    r1 = 3 * deg - 6 - 2 * r0
    baseline = 3 * phi + 2
    bound = 3 * deg - 2 * r0 - 3
    return ExampleRecord(
        name=f"{name}-k{k}",
        construction={"curve": {"n": 2, "components": rows}, "map": f"z^{k}"},
        expected={
            "deg_f": (deg, f"{src}: degree of the composite with z^k"),
            "r_0": (r0, f"{src}: first ramification 2(k-1) from the branch points 0 and oo of z^k"),
            "r_1": (r1, "forced by the weighted Plücker relation 2 r_0 + r_1 = 3 deg f - 6"),
            "deg_phi": (phi, f"{src}: degree of the first Gauss transform"),
            "theorem": (bound, f"{src}: 3 deg f - 2 r_0 - 3"),
            "corollary": (bound, "3 deg phi + r_0 + 3, same number in terms of deg phi"),
            "baseline": (baseline, "classical estimate 3 deg phi + 2"),
            "improvement": (2 * k - 1, f"{src}: gain 1 + r_0 = 2k - 1 over the classical estimate"),
            "oracle_r": ([r0, r1], "per-point vanishing orders summed over the sphere"),
        },
    )


def _torus(k: int) -> ExampleRecord:
    src = "torus example, degree-5 directrix with r_0 = 4 composed with a k-fold cover"
    return ExampleRecord(
        name=f"torus-k{k}",
        construction={"abstract": {"n": 2, "g": 1, "deg_f": 5 * k, "rho": 1, "r": [4 * k]}},
        expected={
            "deg_phi": (k, f"{src}: harmonic map of degree k"),
            "theorem": (7 * k, f"{src}: 15k - 8k = 7k"),
            "corollary": (7 * k, "3 deg phi + r_0"),
            "baseline": (3 * k, "classical estimate 3 deg phi"),
            "improvement": (4 * k, f"{src}: gain r_0 = 4k"),
            "improves": (True, "gain 4k > 0"),
        },
    )


def _higher_genus(g: int, k: int) -> ExampleRecord:
    r0 = 2 * k + 2 * g - 2
    src = f"genus {g}: degree-k cover of the sphere composed with the degree-1 harmonic map"
    return ExampleRecord(
        name=f"genus{g}-k{k}",
        construction={"abstract": {"n": 2, "g": g, "deg_f": 3 * k, "rho": 1, "r": [r0]}},
        expected={
            "deg_phi": (k, f"{src}; deg f = 3k and r_0 = 2k + 2g - 2"),
            "improves": (True, "r_0 = 2k + 2g - 2 > g - 1"),
            "improvement": (r0 - (g - 1), "gain r_0 - (g - 1)"),
        },
    )


def _rnc(n: int) -> ExampleRecord:
    return ExampleRecord(
        name=f"rnc-n{n}",
        construction={"curve": curve_to_document(rational_normal_curve(n))},
        expected={
            "deg_f": (n, "rational normal curve [1, z, ..., z^n]"),
            "d": ([(k + 1) * (n - k) for k in range(n + 1)], "associated curves of the rational normal curve"),
            "r": ([0] * n, "unramified: the Wronskian is a nonzero constant"),
            "map_deg": ([n - 2 * p for p in range(n + 1)], "differences of associated degrees"),
            "oracle_r": ([0] * n, "per-point vanishing orders summed over the sphere"),
        },
    )


def build_corpus() -> list[ExampleRecord]:
    out = []
    for k in range(1, 6):
        out.append(_sphere_family("veronese", VERONESE, k, 2 * k, 0, "Veronese [1, z, z^2] o z^k"))
    for k in range(1, 6):
        out.append(_sphere_family("cubic", CUBIC, k, 3 * k, k, "[1, z + z^3, z^2] o z^k"))
    out.extend(_torus(k) for k in range(1, 6))
    for g in (2, 3):
        out.extend(_higher_genus(g, k) for k in range(g + 1, g + 4))
    out.extend(_rnc(n) for n in range(1, 5))
    return out


CORPUS = build_corpus()


def _observe_curve(con: dict) -> dict:
    c = make_curve(con["curve"]["n"], [Poly(r) for r in con["curve"]["components"]])
    if "map" in con:
        c = precompose(c, parse_map(con["map"]))
    inv = invariants(c)
    report = verify_plucker(inv)
    obs = {
        "deg_f": inv.deg_f,
        "d": list(inv.d),
        "r": list(inv.r),
        "map_deg": list(inv.map_deg),
        "oracle_r": ramification_by_points(c),
        "plucker_pass": report.passed,
    }
    obs.update({f"r_{k}": x for k, x in enumerate(inv.r)})
    if inv.n == 2:
        rep = cp2_bounds(DirectrixInvariants.from_sequence(inv, 1))
        obs.update(_bound_fields(rep))
    return obs


def _bound_fields(rep) -> dict:
    return {
        "deg_phi": rep.deg_phi,
        "theorem": rep.theorem,
        "corollary": rep.corollary,
        "baseline": rep.baseline,
        "improvement": rep.improvement,
        "improves": rep.improves,
    }


def _observe_abstract(con: dict) -> dict:
    a = con["abstract"]
    inv = DirectrixInvariants.from_ramification(a["n"], a["g"], a["deg_f"], a["rho"], a["r"])
    rep = cp2_bounds(inv) if inv.n == 2 and inv.rho == 1 and inv.g in (0, 1) else bound_report(inv)
    return _bound_fields(rep)


def run_example(rec: ExampleRecord) -> list[Row]:
    con = rec.construction
    obs = _observe_abstract(con) if "abstract" in con else _observe_curve(con)
    rows = [Row(rec.name, key, exp, obs.get(key), src) for key, (exp, src) in rec.expected.items()]
    if "plucker_pass" in obs:
        rows.append(Row(rec.name, "plucker", True, obs["plucker_pass"], "Plücker residuals all zero"))
    return rows


def run_corpus(name_filter: str | None = None) -> list[Row]:
    rows = []
    for rec in CORPUS:
        if name_filter and name_filter not in rec.name:
            continue
        rows.extend(run_example(rec))
    return rows
