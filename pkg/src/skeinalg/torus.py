"""The Kauffman bracket skein algebra of the thickened torus.

Basis: the empty link together with (p, q)_T = T_gcd(p,q)((p', q')) for
coprime direction (p', q'); canonical labels have p > 0, or p = 0 and q > 0.
(0, 0)_T equals twice the empty link (T_0 = 2).

Multiplication is the product-to-sum rule with the signed determinant
D = p*s - q*r:

    (p, q)_T * (r, s)_T = t^D (p+r, q+s)_T + t^-D (p-r, q-s)_T
"""

from __future__ import annotations

from .laurent import LaurentPoly, as_laurent, tpow


class EmptyTimes2:
    """Marker: (0,0) is not a basis curve but twice the empty link."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EmptyTimes2"


EMPTY_TIMES_2 = EmptyTimes2()


def canonicalize(p, q):
    """Canonical basis label for (p, q), or EMPTY_TIMES_2 for (0, 0)."""
    if p == 0 and q == 0:
        return EMPTY_TIMES_2
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q)
    return (p, q)


class TorusElement:
    """Laurent-linear combination of the empty link and curves (p, q)_T."""

    __slots__ = ("_empty", "_curves")

    def __init__(self, empty=0, curves=None):
        self._empty = as_laurent(empty)
        data = {}
        if curves:
            for (p, q), c in curves.items():
                c = as_laurent(c)
                if not c:
                    continue
                lab = canonicalize(p, q)
                if lab is EMPTY_TIMES_2:
                    self._empty = self._empty + c * 2
                    continue
                prev = data.get(lab, LaurentPoly.zero()) + c
                if prev:
                    data[lab] = prev
                else:
                    data.pop(lab, None)
        self._curves = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls):
        return cls(empty=1)

    @classmethod
    def curve(cls, p, q, coeff=1):
        return cls(curves={(p, q): coeff})

    # -- inspection ----------------------------------------------------------

    @property
    def empty_coeff(self):
        return self._empty

    def curve_items(self):
        return sorted(self._curves.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def coeff(self, p, q):
        lab = canonicalize(p, q)
        if lab is EMPTY_TIMES_2:
            raise ValueError("(0,0) is not a basis curve; use empty_coeff")
        return self._curves.get(lab, LaurentPoly.zero())

    def is_zero(self):
        return not self._empty and not self._curves

    # -- linear structure -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        out = dict(self._curves)
        for k, c in other._curves.items():
            s = out.get(k, LaurentPoly.zero()) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _wrap(self._empty + other._empty, out)

    def __neg__(self):
        return _wrap(-self._empty, {k: -c for k, c in self._curves.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_laurent(c)
        if not c:
            return TorusElement()
        return _wrap(self._empty * c, {k: v * c for k, v in self._curves.items()})

    def bar(self):
        return _wrap(self._empty.bar(), {k: v.bar() for k, v in self._curves.items()})

    # -- the algebra -------------------------------------------------------------

    def mul(self, other):
        """Bilinear extension of the product-to-sum rule."""
        out = TorusElement(empty=self._empty * other._empty)
        if self._empty:
            out = out + _wrap(
                LaurentPoly.zero(),
                {k: c * self._empty for k, c in other._curves.items()},
            )
        if other._empty:
            out = out + _wrap(
                LaurentPoly.zero(),
                {k: c * other._empty for k, c in self._curves.items()},
            )
        for (p1, q1), c1 in self._curves.items():
            for (p2, q2), c2 in other._curves.items():
                c = c1 * c2
                det = p1 * q2 - q1 * p2
                out = out + TorusElement(
                    curves={(p1 + p2, q1 + q2): c * tpow(det)}
                )
                out = out + TorusElement(
                    curves={(p1 - p2, q1 - q2): c * tpow(-det)}
                )
        return out

    # -- plumbing -------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self._empty == other._empty and self._curves == other._curves

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        from .parsing import format_torus

        return f"TorusElement({format_torus(self)!r})"

    def to_json(self):
        return {
            "empty": self._empty.to_json(),
            "terms": [
                {"p": p, "q": q, "coeff": c.to_json()}
                for (p, q), c in self.curve_items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            empty=LaurentPoly.from_json(data.get("empty", [])),
            curves={
                (rec["p"], rec["q"]): LaurentPoly.from_json(rec["coeff"])
                for rec in data.get("terms", [])
            },
        )


def _wrap(empty, curves):
    e = TorusElement.__new__(TorusElement)
    e._empty = empty
    e._curves = {k: c for k, c in curves.items() if c}
    return e


def mul(a, b):
    """Module-level alias for TorusElement.mul."""
    return a.mul(b)
