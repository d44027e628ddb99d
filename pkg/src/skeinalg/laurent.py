"""Exact Laurent polynomials in one variable over the integers.

A polynomial is stored sparsely as a dict mapping exponent -> nonzero Python
int, so all arithmetic is exact at every coefficient size.  The variable is
written ``t`` by default; the same class doubles for polynomials in q = t^4
(only printing and parsing care about the letter).

    >>> p = parse_laurent("-t^4 - 1")
    >>> format_laurent(p * p)
    't^8 + 2*t^4 + 1'
    >>> format_laurent(p.bar())
    '-t^-4 - 1'
"""

from __future__ import annotations

from .errors import NotAUnit, NotInQ, ParseError


class LaurentPoly:
    """An integer Laurent polynomial, immutable by convention."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for e, c in terms.items():
                if c:
                    data[int(e)] = int(c)
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def term(cls, coeff, exp):
        return cls({exp: coeff})

    # -- inspection --------------------------------------------------------

    def items(self):
        """Term list sorted by descending exponent."""
        return sorted(self._terms.items(), key=lambda ec: -ec[0])

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def is_zero(self):
        return not self._terms

    def is_unit(self):
        """True iff the polynomial is +-t^k for some k."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def unit_parts(self):
        """(coefficient, exponent) of a unit; raises NotAUnit otherwise."""
        if not self.is_unit():
            raise NotAUnit(f"not a unit: {format_laurent(self)}")
        ((e, c),) = self._terms.items()
        return c, e

    def max_exp(self):
        return max(self._terms) if self._terms else None

    def min_exp(self):
        return min(self._terms) if self._terms else None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = as_laurent(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-as_laurent(other))

    def __rsub__(self, other):
        return as_laurent(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return _wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((e1, c1),) = a.items()
            if c1 == 1:
                return _wrap({e1 + e2: c2 for e2, c2 in b.items()})
            return _wrap({e1 + e2: c1 * c2 for e2, c2 in b.items()})
        out = {}
        get = out.get
        bitems = list(b.items())
        for e1, c1 in a.items():
            for e2, c2 in bitems:
                e = e1 + e2
                out[e] = get(e, 0) + c1 * c2
        return _wrap(out)

    __rmul__ = __mul__

    # -- the involution and unit division -----------------------------------

    def shift(self, d):
        """Multiply by t^d (pure exponent shift)."""
        if not d:
            return self
        return _wrap({e + d: c for e, c in self._terms.items()})

    def bar(self):
        """The mirror involution t -> t^-1 (coefficientwise exponent flip)."""
        return _wrap({-e: c for e, c in self._terms.items()})

    def div_by_unit(self, unit):
        """Exact division by a unit +-t^k.

        >>> format_laurent(parse_laurent("t^6 + t^2").div_by_unit(parse_laurent("-t^4")))
        '-t^2 - t^-2'
        """
        unit = as_laurent(unit)
        c, e = unit.unit_parts()
        return _wrap({exp - e: coeff * c for exp, coeff in self._terms.items()})

    def to_q(self):
        """Rewrite a polynomial in t as one in q = t^4.

        Every exponent must be divisible by 4; otherwise NotInQ is raised.
        >>> format_laurent(parse_laurent("-t^4 - 1").to_q(), var="q")
        '-q - 1'
        """
        out = {}
        for e, c in self._terms.items():
            if e % 4:
                raise NotInQ(f"exponent {e} not divisible by 4 in {format_laurent(self)}")
            out[e // 4] = c
        return _wrap(out)

    def from_q(self):
        """Inverse of to_q: substitute q = t^4 into a q-polynomial."""
        return _wrap({4 * e: c for e, c in self._terms.items()})

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    # -- serialization -------------------------------------------------------

    def to_json(self):
        """[[exponent, coefficient-as-decimal-string], ...], exponent-descending."""
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data})


def _wrap(terms):
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = {e: c for e, c in terms.items() if c}
    return p


def as_laurent(v):
    """Coerce an int (or LaurentPoly) to LaurentPoly."""
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, int):
        return LaurentPoly.const(v)
    raise TypeError(f"cannot treat {type(v).__name__} as a Laurent polynomial")


def tpow(e, coeff=1):
    """The monomial coeff * t^e."""
    return LaurentPoly({e: coeff})


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


# -- text form ---------------------------------------------------------------
#
# Canonical text is a signed sum of monomials in descending exponent order:
#   "-t^4 - 1", "2*t", "t^-2", "3", "0"


def format_laurent(p, var="t"):
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.items():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse_laurent(text, var="t"):
    """Parse the canonical text form (whitespace-insensitive)."""
    terms, pos, n = {}, 0, len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i, what):
        j = i
        if j < n and text[j] == "-":
            j += 1
        k = j
        while k < n and text[k].isdigit():
            k += 1
        if k == j:
            raise ParseError(f"expected {what}", i, ("integer",))
        return int(text[i:k]), k

    pos = skip_ws(pos)
    if pos >= n:
        raise ParseError("empty polynomial", pos, ("term",))
    first = True
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < n and text[pos] in "+-":
            if first and text[pos] == "+":
                raise ParseError("unexpected leading '+'", pos, ("term",))
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", pos, ("+", "-"))
        first = False
        coeff = None
        if pos < n and text[pos].isdigit():
            coeff, pos = read_int(pos, "coefficient")
            pos = skip_ws(pos)
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
            else:
                # bare integer term
                terms[0] = terms.get(0, 0) + sign * coeff
                pos = skip_ws(pos)
                if pos >= n:
                    break
                continue
        if pos < n and text[pos] == var:
            pos += 1
            exp = 1
            if pos < n and text[pos] == "^":
                exp, pos = read_int(pos + 1, "exponent")
            c = coeff if coeff is not None else 1
            terms[exp] = terms.get(exp, 0) + sign * c
        else:
            raise ParseError(f"expected '{var}'", pos, (var, "integer"))
        pos = skip_ws(pos)
        if pos >= n:
            break
    return LaurentPoly(terms)
