"""Text formats: polynomial grammar, map/curve/point files, JSON shaping.

Grammar (whitespace insignificant):

    poly   := term (('+'|'-') term)*
    term   := [coeff ['*']] factor ('*' factor)*
    factor := ('x'|'y'|'z') ['^' nat]
    coeff  := int | int '/' int

Maps are three ';'-separated polynomials.  Rational functions are
``num`` or ``num / den`` in the single variable x, with optional
parentheses.  Every parse error carries a byte-offset span into the
input.
"""

from __future__ import annotations

from fractions import Fraction

from . import _univariate as uni
from .arith import HomPoly, Point
from .errors import PolyParseError
from .ratfunc import RatFunc1


class SourceSpan(tuple):
    """(start, end) byte offsets; start <= end."""

    def __new__(cls, start, end):
        if start > end:
            raise ValueError("span start exceeds end")
        return super().__new__(cls, (start, end))

    @property
    def start(self):
        return self[0]

    @property
    def end(self):
        return self[1]


# -- tokenizer ---------------------------------------------------------------

_SYMBOLS = set("+-*/^();,=:")


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j], SourceSpan(i, j)))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            toks.append(("name", text[i:j], SourceSpan(i, j)))
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append((ch, ch, SourceSpan(i, i + 1)))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", SourceSpan(i, i + 1))
    toks.append(("end", "", SourceSpan(n, n)))
    return toks


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        if t[0] != "end":
            self.i += 1
        return t

    def expect(self, kind):
        t = self.peek()
        if t[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {t[1]!r}", t[2])
        return self.next()


# -- trivariate polynomials ---------------------------------------------------


def _parse_coeff(cur):
    t = cur.expect("num")
    num = int(t[1])
    if cur.peek()[0] == "/":
        save = cur.i
        cur.next()
        if cur.peek()[0] == "num":
            den_tok = cur.next()
            den = int(den_tok[1])
            if den == 0:
                raise PolyParseError("zero denominator in coefficient", den_tok[2])
            return Fraction(num, den)
        cur.i = save
    return Fraction(num)


def _parse_term(cur):
    coeff = Fraction(1)
    exps = [0, 0, 0]
    saw_anything = False
    if cur.peek()[0] == "num":
        coeff = _parse_coeff(cur)
        saw_anything = True
        if cur.peek()[0] == "*":
            cur.next()
    while True:
        t = cur.peek()
        if t[0] == "name":
            if t[1] not in ("x", "y", "z"):
                raise PolyParseError(f"unknown variable {t[1]!r}", t[2])
            cur.next()
            k = 1
            if cur.peek()[0] == "^":
                cur.next()
                k = int(cur.expect("num")[1])
            exps["xyz".index(t[1])] += k
            saw_anything = True
            if cur.peek()[0] == "*":
                cur.next()
                continue
            continue
        break
    if not saw_anything:
        t = cur.peek()
        raise PolyParseError(f"expected a term, found {t[1]!r}", t[2])
    return coeff, tuple(exps)


def parse_poly_raw(text) -> HomPoly:
    """Parse without canonicalisation (exact coefficients preserved)."""
    cur = _Cursor(_tokenize(text))
    return _parse_poly_at(cur, text, full=True)


def _parse_poly_at(cur, text, full):
    sign = 1
    if cur.peek()[0] in ("+", "-"):
        sign = -1 if cur.next()[0] == "-" else 1
    terms = {}
    deg_seen = {}
    coeff, exps = _parse_term(cur)
    _accumulate(terms, deg_seen, exps, sign * coeff, cur, text)
    while cur.peek()[0] in ("+", "-"):
        sign = -1 if cur.next()[0] == "-" else 1
        coeff, exps = _parse_term(cur)
        _accumulate(terms, deg_seen, exps, sign * coeff, cur, text)
    if full:
        t = cur.peek()
        if t[0] != "end":
            raise PolyParseError(f"trailing input {t[1]!r}", t[2])
    degrees = sorted({sum(e) for e, c in terms.items() if c})
    if len(degrees) > 1:
        raise PolyParseError(
            f"inhomogeneous polynomial: degrees {degrees[0]} and {degrees[-1]} present",
            SourceSpan(0, len(text)),
        )
    clean = {e: c for e, c in terms.items() if c}
    if not clean:
        return HomPoly.zero()
    return HomPoly(degrees[0], clean, _validated=True)


def _accumulate(terms, deg_seen, exps, coeff, cur, text):
    terms[exps] = terms.get(exps, Fraction(0)) + coeff
    deg_seen[sum(exps)] = True


def parse_poly(text) -> HomPoly:
    """Parse to the canonical representative."""
    return parse_poly_raw(text).canonical()


def format_poly(p: HomPoly) -> str:
    """Deterministic graded-lex-descending rendering; exact round-trip."""
    if p.is_zero:
        return "0"
    parts = []
    for mono in sorted(p.terms, reverse=True):
        c = Fraction(p.terms[mono])
        factors = []
        for name, e in zip("xyz", mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- maps ---------------------------------------------------------------------


def parse_map(text):
    """Raw polynomial triple from 'f0; f1; f2' (no normalisation)."""
    pieces = text.split(";")
    if len(pieces) != 3:
        raise PolyParseError(
            f"a map needs exactly 3 components, found {len(pieces)}",
            SourceSpan(0, len(text)),
        )
    offset = 0
    polys = []
    for piece in pieces:
        try:
            polys.append(parse_poly_raw(piece))
        except PolyParseError as e:
            raise PolyParseError(
                str(e).rsplit(" (at", 1)[0],
                SourceSpan(offset + e.span[0], offset + e.span[1]),
            ) from None
        offset += len(piece) + 1
    return tuple(polys)


def format_map(triple) -> str:
    return "; ".join(format_poly(f) for f in triple)


# -- univariate rational functions ---------------------------------------------


def _parse_upoly_sum(cur):
    coeffs = []

    def parse_atom():
        t = cur.peek()
        if t[0] == "(":
            cur.next()
            inner = _parse_upoly_sum(cur)
            cur.expect(")")
            return inner
        return _parse_uterm(cur)

    sign = 1
    if cur.peek()[0] in ("+", "-"):
        sign = -1 if cur.next()[0] == "-" else 1
    coeffs = uni.scale(parse_atom(), sign)
    while cur.peek()[0] in ("+", "-"):
        sign = -1 if cur.next()[0] == "-" else 1
        coeffs = uni.add(coeffs, uni.scale(parse_atom(), sign))
    return coeffs


def _parse_uterm(cur):
    coeff = Fraction(1)
    exp = 0
    saw = False
    if cur.peek()[0] == "num":
        coeff = _parse_coeff(cur)
        saw = True
        if cur.peek()[0] == "*":
            cur.next()
    while cur.peek()[0] == "name":
        t = cur.next()
        if t[1] != "x":
            raise PolyParseError(
                f"only variable x is allowed here, found {t[1]!r}", t[2]
            )
        k = 1
        if cur.peek()[0] == "^":
            cur.next()
            k = int(cur.expect("num")[1])
        exp += k
        saw = True
        if cur.peek()[0] == "*":
            cur.next()
    if not saw:
        t = cur.peek()
        raise PolyParseError(f"expected a term, found {t[1]!r}", t[2])
    out = [Fraction(0)] * exp + [coeff]
    return uni.trim(out)


def parse_ratfunc(text) -> RatFunc1:
    """'num' or 'num / den' in x; reduced, monic denominator."""
    cur = _Cursor(_tokenize(text))
    num = _parse_upoly_sum(cur)
    den = [Fraction(1)]
    if cur.peek()[0] == "/":
        slash = cur.next()
        den = _parse_upoly_sum(cur)
        if not den:
            raise PolyParseError("zero denominator", slash[2])
    t = cur.peek()
    if t[0] != "end":
        raise PolyParseError(f"trailing input {t[1]!r}", t[2])
    return RatFunc1(num, den)


def format_ratfunc(f: RatFunc1) -> str:
    num = _format_upoly(list(f.num))
    if f.is_polynomial:
        return num
    return f"({num})/({_format_upoly(list(f.den))})"


def _format_upoly(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            xpart = "x" if k == 1 else f"x^{k}"
            body = xpart if abs(c) == 1 else f"{abs(c)}*{xpart}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- files ----------------------------------------------------------------------


def _parse_rat_token(tok: str, offset: int) -> Fraction:
    tok = tok.strip()
    try:
        if "/" in tok:
            a, b = tok.split("/")
            return Fraction(int(a), int(b))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise PolyParseError(
            f"bad rational literal {tok!r}", SourceSpan(offset, offset + len(tok))
        ) from None


def parse_point_line(line: str, offset: int = 0) -> Point:
    parts = line.split(",")
    if len(parts) != 3:
        raise PolyParseError(
            "a point needs 3 comma-separated coordinates",
            SourceSpan(offset, offset + len(line)),
        )
    return Point(*[_parse_rat_token(p, offset) for p in parts])


def parse_points(text: str):
    """Point-list file: one 'x,y,z' per line; blank and '#' lines skipped."""
    points = []
    offset = 0
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            points.append(parse_point_line(stripped, offset))
        offset += len(line) + 1
    return points


def format_points(points) -> str:
    return "\n".join(",".join(str(c) for c in p.coords) for p in points) + "\n"


def parse_curve_file(text: str):
    """Curve file: 'F = <poly>' plus zero or more 'sing = x,y,z : m' lines.

    Returns (HomPoly, [(Point, multiplicity)]).
    """
    f = None
    sing = []
    offset = 0
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            offset += len(line) + 1
            continue
        if "=" not in stripped:
            raise PolyParseError(
                "expected 'key = value'", SourceSpan(offset, offset + len(line))
            )
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "F":
            f = parse_poly(value)
        elif key == "sing":
            if ":" not in value:
                raise PolyParseError(
                    "singular point needs 'x,y,z : mult'",
                    SourceSpan(offset, offset + len(line)),
                )
            coords, _, mult = value.partition(":")
            sing.append((parse_point_line(coords, offset), int(mult.strip())))
        else:
            raise PolyParseError(
                f"unknown key {key!r}", SourceSpan(offset, offset + len(key))
            )
        offset += len(line) + 1
    if f is None:
        raise PolyParseError("curve file has no 'F =' line", SourceSpan(0, len(text)))
    return f, sing


def format_curve_file(f: HomPoly, sing) -> str:
    lines = [f"F = {format_poly(f)}"]
    for p, m in sing:
        lines.append("sing = " + ",".join(str(c) for c in p.coords) + f" : {m}")
    return "\n".join(lines) + "\n"


# -- JSON shaping ------------------------------------------------------------------


def json_ok(result, witness=None):
    out = {"status": "ok", "result": result}
    if witness is not None:
        out["witness"] = witness
    return out


def json_error(message, **extra):
    out = {"status": "error", "result": {"message": message}}
    out["result"].update(extra)
    return out
