"""Command-line front end.

Exit codes: 0 ok, 1 supplied invariants fail verification, 2 bad input,
3 curve not full, 4 internal inconsistency (a bug), 5 example mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import DirectrixInvariants, bound_report, cp2_bounds
from .corpus import run_corpus
from .curve import ProjectiveCurve, precompose
from .errors import HarmonicIndexError, InternalInconsistency, InvalidDirectrix, LiteralSyntaxError, NotFull
from .sequence import SequenceInvariants, invariants, verify_plucker
from .serialize import InputError, curve_to_document, dumps, parse_curve_document, parse_map

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_NOT_FULL, EXIT_BUG, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5


# -- input -------------------------------------------------------------------


def _load_json(source: str):
    """``source`` is a path, ``-`` for stdin, or inline JSON."""
    if source.lstrip().startswith("{"):
        text = source
    elif source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _rho_list(spec: str, n: int) -> list[int]:
    if spec == "all":
        return list(range(n + 1))
    try:
        rhos = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--rho expects 'all' or a comma list of integers, got {spec!r}") from None
    bad = [r for r in rhos if not 0 <= r <= n]
    if bad or not rhos:
        raise InputError(f"--rho entries must lie in 0..{n}, got {spec!r}")
    return rhos


# -- text rendering ----------------------------------------------------------


def render_table(header: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in header]] + [["-" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _text_invariants(inv: SequenceInvariants) -> str:
    rows = []
    for k in range(inv.n + 1):
        rows.append([k, inv.d[k], inv.G[k] if inv.G else None, inv.r[k] if k < inv.n else None, inv.map_deg[k]])
    return render_table(["k", "d_k", "G_k", "r_k", "deg f_k"], rows)


def _text_bounds(reports) -> str:
    rows = []
    for rep in reports:
        rows.append([
            rep.inputs.rho,
            rep.deg_phi,
            rep.baseline,
            rep.theorem,
            rep.corollary,
            rep.improvement,
            rep.improves,
            "; ".join(rep.notes),
        ])
    return render_table(["rho", "deg phi", "baseline", "deg f form", "deg phi form", "gain", "improves", "notes"], rows)


def _text_verification(rep) -> str:
    d = rep.to_dict()
    lines = [
        f"recursion residuals : {d['recursion_residuals']}",
        f"ramrelation residual: {d['ramrelation_residual']}",
        f"degree residuals    : {d['degree_residuals']}",
    ]
    for err in d.get("errors", []):
        lines.append(f"error               : {err}")
    lines.append(f"pass                : {d['pass']}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------


def _reports_for(inv: SequenceInvariants, rhos: list[int]):
    out = []
    for rho in rhos:
        d = DirectrixInvariants.from_sequence(inv, rho)
        out.append(cp2_bounds(d) if inv.n == 2 and rho == 1 else bound_report(d))
    return out


def _analyze(curve: ProjectiveCurve, normalization: dict, args, out) -> int:
    inv = invariants(curve)
    rhos = _rho_list(args.rho, curve.n)
    reports = _reports_for(inv, rhos)
    check = verify_plucker(inv)
    if not check.passed:
        raise InternalInconsistency(f"computed invariants fail verification: {check.to_dict()}")
    if args.format == "json":
        doc = {
            "curve": curve_to_document(curve),
            "normalization": normalization,
            "full": True,
            "invariants": inv.to_dict(),
            "bounds": [r.to_dict() for r in reports],
            "verification": check.to_dict(),
        }
        out.write(dumps(doc))
    else:
        out.write(f"curve  : {curve}  (CP^{curve.n}, degree {curve.d})\n")
        if normalization.get("changed"):
            out.write(f"removed common factor {normalization['common_factor']}\n")
        out.write("\n" + _text_invariants(inv) + "\n\n")
        out.write(_text_bounds(reports) + "\n\n")
        out.write(_text_verification(check) + "\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    curve, norm = parse_curve_document(_load_json(args.file))
    return _analyze(curve, norm, args, out)


def cmd_compose(args, out) -> int:
    curve, norm = parse_curve_document(_load_json(args.file))
    try:
        m = parse_map(args.map)
    except (LiteralSyntaxError, HarmonicIndexError) as exc:
        if isinstance(exc, InternalInconsistency):
            raise
        raise InputError(str(exc), "--map") from None
    composed = precompose(curve, m)
    if args.format == "text":
        out.write(f"map    : z -> {m}  (degree {m.degree})\n")
    return _analyze(composed, {**norm, "map": str(m)}, args, out)


def cmd_bounds(args, out) -> int:
    try:
        r = [int(x) for x in args.r.split(",") if x.strip()] if args.r else []
    except ValueError:
        raise InputError(f"--r expects a comma list of integers, got {args.r!r}") from None
    try:
        inv = DirectrixInvariants.from_ramification(args.n, args.g, args.deg_f, args.rho, r)
    except InvalidDirectrix as exc:
        raise InputError(str(exc)) from None
    if inv.n == 2 and inv.rho == 1 and inv.g in (0, 1):
        rep = cp2_bounds(inv)
    else:
        rep = bound_report(inv)
    if args.format == "json":
        out.write(dumps(rep.to_dict()))
    else:
        out.write(_text_bounds([rep]) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    doc = _load_json(args.file)
    from_curve = isinstance(doc, dict) and "components" in doc
    if from_curve:
        curve, _ = parse_curve_document(doc)
        inv = invariants(curve)
    else:
        try:
            inv = SequenceInvariants.from_dict(doc)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"expected a curve or an invariants document ({exc})") from None
    rep = verify_plucker(inv)
    out.write(dumps(rep.to_dict()) if args.format == "json" else _text_verification(rep) + "\n")
    if rep.passed:
        return EXIT_OK
    if from_curve:
        raise InternalInconsistency("computed invariants fail verification")
    return EXIT_FAILED


def cmd_examples(args, out) -> int:
    rows = run_corpus(args.filter)
    if not rows:
        raise InputError(f"no example matches {args.filter!r}")
    if args.format == "json":
        out.write(dumps([
            {"example": r.example, "field": r.field, "expected": r.expected, "actual": r.actual,
             "match": r.match, "source": r.source}
            for r in rows
        ]))
    else:
        table = [[r.example, r.field, r.expected, r.actual, "match" if r.match else "MISMATCH"] for r in rows]
        out.write(render_table(["example", "field", "expected", "actual", "status"], table) + "\n")
        bad = sum(not r.match for r in rows)
        out.write(f"\n{len(rows) - bad}/{len(rows)} rows match\n")
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="harmonic-index",
        description="Harmonic-sequence invariants of rational curves in CP^n and index bounds.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    a = sub.add_parser("analyze", aliases=["analyze-curve"], help="invariants and bounds of a curve file")
    a.add_argument("file", help="curve JSON path, '-' for stdin, or inline JSON")
    a.add_argument("--rho", default="all", help="'all' or comma list, e.g. 1,2")
    fmt(a)
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", aliases=["bounds-abstract"], help="bounds from abstract directrix data")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--g", type=int, default=0)
    b.add_argument("--deg-f", type=int, required=True, dest="deg_f")
    b.add_argument("--rho", type=int, required=True)
    b.add_argument("--r", default="", help="r_0,...,r_{rho-1} or the full r_0,...,r_{n-1}")
    fmt(b)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="Plücker residuals of a curve or invariants document")
    v.add_argument("file")
    fmt(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compose-analyze", help="precompose a curve with a rational map, then analyze")
    c.add_argument("file")
    c.add_argument("--map", required=True, help="NUM or NUM/DEN in z, e.g. 'z^3' or '(z^2+1)/(z-1)'")
    c.add_argument("--rho", default="all")
    fmt(c)
    c.set_defaults(func=cmd_compose)

    e = sub.add_parser("examples", help="replay the built-in example corpus")
    e.add_argument("--filter", default=None, help="substring of example names")
    fmt(e)
    e.set_defaults(func=cmd_examples)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except NotFull as exc:
        err.write(f"not full: {exc}\n")
        return EXIT_NOT_FULL
    except InternalInconsistency as exc:
        err.write(f"internal inconsistency (please report): {exc}\n")
        return EXIT_BUG
    except HarmonicIndexError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
