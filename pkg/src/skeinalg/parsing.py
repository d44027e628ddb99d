"""Text grammar for skein elements, and the matching canonical printers.

An element is a signed sum of terms; a term is a '*'-joined product of
factors.  Factors:

    integer             123
    t-monomial          t, t^8, t^-12
    parenthesized       (t^4 - 1 - t^-4)      Laurent coefficient
    curve atom          (1,-3)                torus basis curve
    power atoms         x, x^2, y, y^3
    Chebyshev atoms     S_2(x), S_1(y)

A term may contain at most one curve atom, and never both a curve and x/y
atoms; elements mixing curve terms and x/y terms are rejected.  Printers emit
a canonical form this parser accepts, so print -> parse is the identity.
"""

from __future__ import annotations

import re

from . import chebyshev
from .bivariate import SkeinElement
from .errors import ParseError
from .laurent import LaurentPoly, format_laurent, parse_laurent, tpow
from .torus import TorusElement

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<satom>S_(?P<sidx>\d+)\(\s*(?P<svar>[xy])\s*\))
  | (?P<num>\d+)
  | (?P<var>[txy])
  | (?P<op>[-+*^(),])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            if m.group("satom"):
                tokens.append(("satom", (int(m.group("sidx")), m.group("svar")), pos))
            elif m.group("num"):
                tokens.append(("num", int(m.group("num")), pos))
            elif m.group("var"):
                tokens.append(("var", m.group("var"), pos))
            else:
                tokens.append((m.group("op"), m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, expected=()):
        raise ParseError(message, self.peek()[2], expected)

    # -- exponents -----------------------------------------------------------

    def _exponent(self):
        sign = 1
        kind, val, pos = self.peek()
        if kind == "-":
            sign = -1
            self.next()
            kind, val, pos = self.peek()
        if kind != "num":
            self.error("expected an integer exponent", ("integer",))
        self.next()
        return sign * val

    # -- parenthesized groups: curve or Laurent coefficient -------------------

    def _group(self):
        open_pos = self.peek()[2]
        self.next()  # consume '('
        depth = 1
        j = self.i
        has_comma = False
        while j < len(self.tokens):
            kind = self.tokens[j][0]
            if kind == "(":
                depth += 1
            elif kind == ")":
                depth -= 1
                if depth == 0:
                    break
            elif kind == "," and depth == 1:
                has_comma = True
            elif kind == "end":
                raise ParseError("unbalanced '('", open_pos, (")",))
            j += 1
        if j >= len(self.tokens) or self.tokens[j][0] != ")":
            raise ParseError("unbalanced '('", open_pos, (")",))
        inner = self.tokens[self.i : j]
        close_pos = self.tokens[j][2]
        self.i = j + 1
        if has_comma:
            return ("curve", self._curve_pair(inner, open_pos))
        start = inner[0][2] if inner else close_pos
        snippet = self.text[start:close_pos]
        try:
            return ("coeff", parse_laurent(snippet, var="t"))
        except ParseError as exc:
            raise ParseError(
                f"bad coefficient group: {exc.args[0]}", start + exc.position,
                exc.expected,
            ) from None

    @staticmethod
    def _curve_pair(inner, open_pos):
        vals = []
        k = 0
        for part in range(2):
            sign = 1
            if k < len(inner) and inner[k][0] == "-":
                sign = -1
                k += 1
            if k >= len(inner) or inner[k][0] != "num":
                raise ParseError("expected integer in curve label", open_pos, ("integer",))
            vals.append(sign * inner[k][1])
            k += 1
            if part == 0:
                if k >= len(inner) or inner[k][0] != ",":
                    raise ParseError("expected ',' in curve label", open_pos, (",",))
                k += 1
        if k != len(inner):
            raise ParseError("trailing tokens in curve label", open_pos, (")",))
        return (vals[0], vals[1])

    # -- terms and elements -----------------------------------------------------

    def _factor(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.next()
            return ("coeff", LaurentPoly.const(val))
        if kind == "var":
            self.next()
            exp = 1
            if self.peek()[0] == "^":
                self.next()
                exp = self._exponent()
            if val == "t":
                return ("coeff", tpow(exp))
            if exp < 0:
                raise ParseError(f"negative exponent for {val}", pos)
            if val == "x":
                return ("xy", SkeinElement.term(exp, 0))
            return ("xy", SkeinElement.term(0, exp))
        if kind == "satom":
            self.next()
            idx, var = val
            if var == "x":
                return ("xy", SkeinElement.x_cheb(idx))
            return ("xy", SkeinElement.y_cheb(idx))
        if kind == "(":
            return self._group()
        self.error("expected a factor", ("number", "t", "x", "y", "S_n(..)", "("))

    def _term(self):
        coeff = LaurentPoly.const(1)
        xy = None
        curve = None
        while True:
            fk, fv = self._factor()
            if fk == "coeff":
                coeff = coeff * fv
            elif fk == "xy":
                xy = fv if xy is None else xy.mul(fv)
            else:
                if curve is not None:
                    self.error("more than one curve atom in a term")
                curve = fv
            if self.peek()[0] == "*":
                self.next()
                continue
            break
        if curve is not None and xy is not None:
            self.error("term mixes a curve atom with x/y atoms")
        return coeff, xy, curve

    def element(self):
        terms = []
        kind = self.peek()[0]
        if kind == "end":
            self.error("empty expression", ("term",))
        sign = 1
        if kind == "-":
            self.next()
            sign = -1
        while True:
            coeff, xy, curve = self._term()
            if sign < 0:
                coeff = -coeff
            terms.append((coeff, xy, curve))
            kind = self.peek()[0]
            if kind in ("+", "-"):
                sign = -1 if kind == "-" else 1
                self.next()
                continue
            if kind == "end":
                break
            self.error("expected '+', '-' or end of input", ("+", "-", "end"))
        return terms


def parse_element(text):
    """Parse to ("torus", TorusElement), ("xy", SkeinElement) or ("scalar", LaurentPoly)."""
    terms = _Parser(text).element()
    has_curve = any(curve is not None for _, _, curve in terms)
    has_xy = any(xy is not None for _, xy, _ in terms)
    if has_curve and has_xy:
        raise ParseError("expression mixes torus curves with x/y atoms", 0)
    if has_curve:
        out = TorusElement()
        for coeff, _, curve in terms:
            if curve is None:
                out = out + TorusElement(empty=coeff)
            else:
                out = out + TorusElement.curve(*curve, coeff=coeff)
        return ("torus", out)
    if has_xy:
        out = SkeinElement()
        for coeff, xy, _ in terms:
            part = SkeinElement.one() if xy is None else xy
            out = out + part.scale(coeff)
        return ("xy", out)
    scalar = LaurentPoly.zero()
    for coeff, _, _ in terms:
        scalar = scalar + coeff
    return ("scalar", scalar)


def parse_torus(text):
    kind, value = parse_element(text)
    if kind == "torus":
        return value
    if kind == "scalar":
        return TorusElement(empty=value)
    raise ParseError("expected a torus-algebra expression", 0)


def parse_xy(text):
    kind, value = parse_element(text)
    if kind == "xy":
        return value
    if kind == "scalar":
        return SkeinElement.one().scale(value)
    raise ParseError("expected an x/y module expression", 0)


def parse_expression(text):
    """Auto-detecting parse: TorusElement if curve atoms appear, else SkeinElement."""
    kind, value = parse_element(text)
    if kind == "torus":
        return value
    if kind == "xy":
        return value
    return SkeinElement.one().scale(value)


# -- printers -------------------------------------------------------------------


def _render_term(coeff, atom):
    """Return (negative, body) for a nonzero coefficient and an atom string."""
    terms = coeff.items()
    if not atom:
        if len(terms) == 1:
            e, c = terms[0]
            body = format_laurent(LaurentPoly({e: abs(c)}))
            return c < 0, body
        return False, f"({format_laurent(coeff)})"
    if len(terms) == 1:
        e, c = terms[0]
        parts = []
        if abs(c) != 1:
            parts.append(str(abs(c)))
        if e:
            parts.append("t" if e == 1 else f"t^{e}")
        parts.append(atom)
        return c < 0, "*".join(parts)
    return False, f"({format_laurent(coeff)})*{atom}"


def _join(rendered):
    if not rendered:
        return "0"
    neg, body = rendered[0]
    out = ("-" if neg else "") + body
    for neg, body in rendered[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _power_atom(m, n):
    parts = []
    if m:
        parts.append("x" if m == 1 else f"x^{m}")
    if n:
        parts.append("y" if n == 1 else f"y^{n}")
    return "*".join(parts)


def _cheb_atom(a, b):
    parts = []
    if a:
        parts.append(f"S_{a}(x)")
    if b:
        parts.append(f"S_{b}(y)")
    return "*".join(parts)


def format_xy(element, basis="chebyshev"):
    """Canonical text for an x/y element; highest y-part first."""
    if element.is_zero():
        return "0"
    if basis == "power":
        items = sorted(element.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
        return _join([_render_term(c, _power_atom(m, n)) for (m, n), c in items])
    if basis == "chebyshev":
        cheb = element.to_cheb()
        keys = sorted(cheb, key=lambda ab: (-ab[1], -ab[0]))
        return _join([_render_term(cheb[k], _cheb_atom(*k)) for k in keys])
    raise ValueError(f"unknown basis {basis!r}")


def format_torus(element):
    if element.is_zero():
        return "0"
    rendered = [
        _render_term(c, f"({p},{q})") for (p, q), c in element.curve_items()
    ]
    if element.empty_coeff:
        rendered.append(_render_term(element.empty_coeff, ""))
    return _join(rendered)
