"""Two-variable skein elements: Laurent-coefficient combinations of x^m y^n.

This is the coefficient-carrying workhorse shared by the handlebody algebra
(where both exponents are unbounded) and the knot-complement module (where
functions enforce y-degree <= 3).  Conversions to the Chebyshev S basis are
done per variable and are exact.
"""

from __future__ import annotations

from . import chebyshev
from .errors import ParseError
from .laurent import LaurentPoly, as_laurent


class SkeinElement:
    """Immutable-by-convention sparse element {(m, n): LaurentPoly}."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for (m, n), c in terms.items():
                c = as_laurent(c)
                if c:
                    data[(int(m), int(n))] = c
        self._terms = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, m, n, coeff=1):
        return cls({(m, n): coeff})

    @classmethod
    def x_cheb(cls, a, coeff=1):
        """coeff * S_a(x)."""
        c = as_laurent(coeff)
        return cls({(d, 0): c * ic for d, ic in chebyshev.cheb_S(a).items()})

    @classmethod
    def y_cheb(cls, b, coeff=1):
        """coeff * S_b(y)."""
        c = as_laurent(coeff)
        return cls({(0, d): c * ic for d, ic in chebyshev.cheb_S(b).items()})

    # -- inspection ----------------------------------------------------------

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, m, n):
        return self._terms.get((m, n), LaurentPoly.zero())

    def is_zero(self):
        return not self._terms

    def y_degree(self):
        return max((n for (_, n) in self._terms), default=0)

    def x_degree(self):
        return max((m for (m, _) in self._terms), default=0)

    def support(self):
        return set(self._terms)

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, LaurentPoly.zero()) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _wrap(out)

    def __neg__(self):
        return _wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_laurent(c)
        if not c:
            return SkeinElement()
        return _wrap({k: v * c for k, v in self._terms.items()})

    def div_by_unit(self, unit):
        return _wrap({k: v.div_by_unit(unit) for k, v in self._terms.items()})

    def bar(self):
        """Coefficientwise t -> t^-1 (the mirror involution fixes x and y)."""
        return _wrap({k: v.bar() for k, v in self._terms.items()})

    def add_scaled_into(self, acc: dict, c) -> None:
        """acc[(m,n)] += c * self, mutating the raw accumulator dict.

        Accumulators let long linear combinations avoid one intermediate
        element per term; finish with ``SkeinElement(acc)``.
        """
        get = acc.get
        for k, v in self._terms.items():
            prod = v * c
            prev = get(k)
            acc[k] = prod if prev is None else prev + prod

    # -- multiplication --------------------------------------------------------

    def mul_x(self, i=1):
        return _wrap({(m + i, n): c for (m, n), c in self._terms.items()})

    def mul_y(self, j=1):
        return _wrap({(m, n + j): c for (m, n), c in self._terms.items()})

    def mul(self, other):
        """Full commutative product (polynomial multiplication)."""
        out = {}
        for (m1, n1), c1 in self._terms.items():
            for (m2, n2), c2 in other._terms.items():
                k = (m1 + m2, n1 + n2)
                s = out.get(k, LaurentPoly.zero()) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _wrap(out)

    def mul_xpoly(self, xp):
        """Multiply by a polynomial in x given as {degree: coeff}."""
        out = SkeinElement()
        for d, c in xp.items():
            out = out + self.mul_x(d).scale(c)
        return out

    def mul_ypoly(self, yp):
        out = SkeinElement()
        for d, c in yp.items():
            out = out + self.mul_y(d).scale(c)
        return out

    # -- Chebyshev views ---------------------------------------------------------

    def to_cheb_y(self):
        """{(m, b): coeff} with the y side rewritten in S_b(y); x stays x^m."""
        slices = {}
        for (m, n), c in self._terms.items():
            slices.setdefault(m, {})[n] = c
        out = {}
        for m, up in slices.items():
            for b, c in chebyshev.power_to_S(up).items():
                out[(m, b)] = c
        return out

    @classmethod
    def from_cheb_y(cls, data):
        out = cls()
        for (m, b), c in data.items():
            out = out + cls.y_cheb(b).mul_x(m).scale(c)
        return out

    def to_cheb(self):
        """{(a, b): coeff} with both sides rewritten in the S basis."""
        half = self.to_cheb_y()
        slices = {}
        for (m, b), c in half.items():
            slices.setdefault(b, {})[m] = c
        out = {}
        for b, up in slices.items():
            for a, c in chebyshev.power_to_S(up).items():
                out[(a, b)] = c
        return out

    @classmethod
    def from_cheb(cls, data):
        out = cls()
        for (a, b), c in data.items():
            out = out + cls.x_cheb(a).mul(cls.y_cheb(b)).scale(c)
        return out

    # -- plumbing -----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset((k, hash(c)) for k, c in self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        from .parsing import format_xy

        return f"SkeinElement({format_xy(self, basis='power')!r})"

    # -- serialization ---------------------------------------------------------------

    def to_json(self, basis="power"):
        """Power basis: a bare array of {m, n, coeff} records.

        Chebyshev view: an object tagged "basis": "chebyshev" whose terms are
        {a, b, coeff} records.
        """
        if basis == "power":
            return [
                {"m": m, "n": n, "coeff": c.to_json()} for (m, n), c in self.items()
            ]
        if basis == "chebyshev":
            cheb = self.to_cheb()
            return {
                "basis": "chebyshev",
                "terms": [
                    {"a": a, "b": b, "coeff": cheb[(a, b)].to_json()}
                    for (a, b) in sorted(cheb)
                ],
            }
        raise ValueError(f"unknown basis {basis!r}")

    @classmethod
    def from_json(cls, data):
        if isinstance(data, dict):
            if data.get("basis") != "chebyshev":
                raise ParseError("expected a chebyshev-tagged element object", 0)
            return cls.from_cheb(
                {
                    (rec["a"], rec["b"]): LaurentPoly.from_json(rec["coeff"])
                    for rec in data["terms"]
                }
            )
        out = {}
        for rec in data:
            out[(rec["m"], rec["n"])] = LaurentPoly.from_json(rec["coeff"])
        return cls(out)


def _wrap(terms):
    e = SkeinElement.__new__(SkeinElement)
    e._terms = {k: c for k, c in terms.items() if c}
    return e


def ypoly_from_S(coeffs):
    """Build a y-only element from {S-index: coeff}: sum coeff * S_b(y)."""
    out = SkeinElement()
    for b, c in coeffs.items():
        out = out + SkeinElement.y_cheb(b, c)
    return out
