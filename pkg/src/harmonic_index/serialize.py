"""Reading curve documents and map expressions; canonical JSON output."""

from __future__ import annotations

import json
import re
from typing import Any

from .curve import ProjectiveCurve, RationalSelfMap, make_curve
from .errors import HarmonicIndexError, LiteralSyntaxError
from .poly import Poly, divexact, gcd, gcd_many
from .scalar import ONE, GaussianRational, I, parse_scalar

__all__ = [
    "InputError",
    "parse_curve_document",
    "parse_curve_file",
    "curve_to_document",
    "parse_map",
    "dumps",
    "json_int",
]

_INT64 = 2**63


class InputError(ValueError):
    """Malformed user input; ``path`` locates the offending JSON node."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


def json_int(x: int):
    """Integers beyond 64 bits travel as decimal strings."""
    return x if -_INT64 <= x < _INT64 else str(x)


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return json_int(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    raise TypeError(f"not JSON-serializable: {obj!r}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- curves -----------------------------------------------------------------


def _scalar_to_json(c: GaussianRational):
    if c.is_real() and c.re.denominator == 1:
        return json_int(c.re.numerator)
    return str(c)


def curve_to_document(c: ProjectiveCurve) -> dict:
    return {"n": c.n, "components": [[_scalar_to_json(a) for a in p.coeffs] or [0] for p in c.components]}


def parse_curve_document(doc: Any) -> tuple[ProjectiveCurve, dict]:
    """Validate ``{"n": int, "components": [[coeff, ...], ...]}``.

    Returns the normalized curve and a record of the normalization.
    """
    if not isinstance(doc, dict):
        raise InputError("expected an object with keys 'n' and 'components'")
    if "n" not in doc:
        raise InputError("missing key 'n'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"'n' must be an integer >= 1, got {n!r}", "$.n")
    comps = doc.get("components")
    if not isinstance(comps, list):
        raise InputError("'components' must be a list", "$.components")
    if len(comps) != n + 1:
        raise InputError(f"CP^{n} needs {n + 1} components, got {len(comps)}", "$.components")
    raw = []
    for i, coeffs in enumerate(comps):
        if not isinstance(coeffs, list):
            raise InputError("component must be a list of coefficients", f"$.components[{i}]")
        row = []
        for j, lit in enumerate(coeffs):
            try:
                row.append(parse_scalar(lit))
            except LiteralSyntaxError as exc:
                raise InputError(str(exc), f"$.components[{i}][{j}]") from None
        raw.append(Poly(row))
    try:
        curve = make_curve(n, raw)
    except HarmonicIndexError as exc:
        raise InputError(str(exc), "$.components") from None
    common = gcd_many(raw)
    return curve, {"common_factor": str(common), "changed": common.degree > 0}


def parse_curve_file(text: str) -> tuple[ProjectiveCurve, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_curve_document(doc)


# -- rational-function expressions in z ---------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([zi])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LiteralSyntaxError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _ExprParser:
    """Recursive descent over  expr := term (+|- term)*,
    term := unary (*|/ unary)*, unary := [-+] unary | power,
    power := atom [^ int], atom := int | z | i | ( expr ).

    Values are pairs (numerator, denominator) of polynomials.
    """

    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise LiteralSyntaxError(f"unexpected end of expression {self.text!r}")
        self.pos += 1
        return tok

    def parse(self):
        val = self.expr()
        if self.peek() is not None:
            raise LiteralSyntaxError(f"unexpected {self.peek()!r} in {self.text!r}")
        return val

    def expr(self):
        num, den = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            n2, d2 = self.term()
            num = num * d2 + n2 * den if op == "+" else num * d2 - n2 * den
            den = den * d2
        return num, den

    def term(self):
        num, den = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            n2, d2 = self.unary()
            if op == "*":
                num, den = num * n2, den * d2
            else:
                if n2.is_zero():
                    raise LiteralSyntaxError(f"division by zero in {self.text!r}")
                num, den = num * d2, den * n2
        return num, den

    def unary(self):
        if self.peek() in ("-", "+"):
            sign = self.take()
            num, den = self.unary()
            return (-num if sign == "-" else num), den
        return self.power()

    def power(self):
        num, den = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise LiteralSyntaxError(f"exponent must be a non-negative integer in {self.text!r}")
            e = int(tok)
            num, den = num**e, den**e
        return num, den

    def atom(self):
        tok = self.take()
        one = Poly.constant(ONE)
        if tok.isdigit():
            return Poly.constant(int(tok)), one
        if tok == "z":
            return Poly.monomial(1), one
        if tok == "i":
            return Poly.constant(I), one
        if tok == "(":
            val = self.expr()
            if self.take() != ")":
                raise LiteralSyntaxError(f"missing ')' in {self.text!r}")
            return val
        raise LiteralSyntaxError(f"unexpected {tok!r} in {self.text!r}")


def parse_rational_function(text: str) -> tuple[Poly, Poly]:
    num, den = _ExprParser(text).parse()
    g = gcd(num, den) if num else den.monic()
    return divexact(num, g), divexact(den, g)


def parse_map(text: str) -> RationalSelfMap:
    """Parse ``NUM/DEN`` (or just ``NUM``) as a self-map of the sphere.

    Any rational expression in ``z`` with Gaussian-rational constants works,
    e.g. ``z^3``, ``z^3/1``, ``(z^2 + 1)/(z - 1)``, ``1/2*z^2 + i*z``.
    """
    num, den = parse_rational_function(text)
    return RationalSelfMap(num, den)
