"""Coefficient tables for the two assembled generator actions.

The action of (1,-3) on S_k(y) collects into

    (1,-3).S_k(y) = sum_j t^(2k+2j-1) alpha_kj S_j(y)

with alpha_kj an integer polynomial in q = t^4 over the odd Chebyshev
polynomials u_i = S_{2i+1}(x); the action of (1,-2) into

    (1,-2).S_k(y) = sum_j t^(-2k-2j) beta_kj S_j(y)

with beta_kj over the even v_i = S_{2i}(x).  This module extracts those
tables from the recomputed actions, loads the stored reference tables,
and diffs the two.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import boundary, chebyshev, knot_module
from .bivariate import SkeinElement
from .errors import InvariantViolation
from .laurent import LaurentPoly, format_laurent, parse_laurent, tpow

KINDS = ("alpha", "beta")

KIND_GENERATOR = {"alpha": (1, -3), "beta": (1, -2)}
KIND_SYMBOL = {"alpha": "u", "beta": "v"}


def prefactor_exponent(kind: str, k: int, j: int) -> int:
    """Exponent of the unit t-power pulled out of the (k,j) block."""
    if kind == "alpha":
        return 2 * k + 2 * j - 1
    if kind == "beta":
        return -2 * k - 2 * j
    raise InvariantViolation(f"unknown table kind {kind!r}")


def x_index_symbol(kind: str, x_index: int) -> str:
    """Render a Chebyshev x-index as the table's u_i / v_i symbol."""
    if kind == "alpha":
        if x_index % 2 == 0:
            raise InvariantViolation("alpha entries carry odd x-indices")
        return f"u{(x_index - 1) // 2}"
    if x_index % 2 == 1:
        raise InvariantViolation("beta entries carry even x-indices")
    return f"v{x_index // 2}"


@dataclass
class TableEntry:
    """One (k,j) block: a q-polynomial per Chebyshev x-index."""

    k: int
    j: int
    coeffs: dict = field(default_factory=dict)  # x_index -> LaurentPoly in q
    status: str = "expected-match"
    note: str = ""

    def nonzero(self) -> dict:
        return {i: c for i, c in sorted(self.coeffs.items()) if not c.is_zero()}


class CoefficientTable:
    """All (k,j) blocks of one generator table."""

    def __init__(self, kind, entries=None, provenance="derived"):
        if kind not in KINDS:
            raise InvariantViolation(f"unknown table kind {kind!r}")
        self.kind = kind
        self.generator = KIND_GENERATOR[kind]
        self.entries = dict(entries or {})  # (k,j) -> TableEntry
        self.provenance = provenance

    def entry(self, k: int, j: int) -> TableEntry:
        return self.entries.get((k, j)) or TableEntry(k, j)

    def blocks(self):
        return [self.entries[key] for key in sorted(self.entries)]

    # -- exports ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "generator": list(self.generator),
            "provenance": self.provenance,
            "entries": [
                {
                    "k": e.k,
                    "j": e.j,
                    "status": e.status,
                    "note": e.note,
                    "coeffs": {
                        str(i): format_laurent(c, var="q")
                        for i, c in e.nonzero().items()
                    },
                }
                for e in self.blocks()
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["table", "provenance", "k", "j", "x_index", "coeff"])
        for e in self.blocks():
            for i, c in e.nonzero().items():
                writer.writerow(
                    [self.kind, self.provenance, e.k, e.j, i,
                     format_laurent(c, var="q")]
                )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"{self.kind} table ({self.provenance});"
            f" generator {self.generator[0], self.generator[1]}"
        ]
        for e in self.blocks():
            parts = [
                f"({format_laurent(c, var='q')})*{x_index_symbol(self.kind, i)}"
                for i, c in sorted(e.nonzero().items(), reverse=True)
            ]
            body = " + ".join(parts) if parts else "0"
            line = f"  {self.kind}[{e.k},{e.j}] = {body}"
            if e.status not in ("expected-match", "derived"):
                line += f"   [{e.status}]"
            lines.append(line)
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        name = "\\alpha" if self.kind == "alpha" else "\\beta"
        sym = KIND_SYMBOL[self.kind]
        p, q = self.generator
        if self.kind == "alpha":
            head = (
                f"({p},{q})_T \\cdot S_k(y) ="
                " \\sum_j t^{2k+2j-1}\\," + name + "_{k,j} S_j(y)"
            )
        else:
            head = (
                f"({p},{q})_T \\cdot S_k(y) ="
                " \\sum_j t^{-2k-2j}\\," + name + "_{k,j} S_j(y)"
            )
        lines = ["\\begin{align*}", head + " \\\\"]
        for e in self.blocks():
            parts = []
            for i, c in e.nonzero().items():
                sub = (i - 1) // 2 if self.kind == "alpha" else i // 2
                parts.append(f"({_latex_poly(c)})\\,{sym}_{{{sub}}}")
            body = " + ".join(parts) if parts else "0"
            lines.append(f"{name}_{{{e.k},{e.j}}} &= {body} \\\\")
        lines.append("\\end{align*}")
        return "\n".join(lines) + "\n"


def _latex_poly(c: LaurentPoly) -> str:
    text = format_laurent(c, var="q")
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "^":
            i += 1
            j = i
            if j < len(text) and text[j] == "-":
                j += 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append("^{" + text[i:j] + "}")
            i = j
        elif ch == "*":
            out.append(" ")
            i += 1
        else:
            out.append(ch)
            i += 1
    return "".join(out)


# -- derivation ------------------------------------------------------------


@lru_cache(maxsize=None)
def derived_table(kind: str) -> CoefficientTable:
    """Extract the q-coefficient table from the recomputed action."""
    action = boundary.derived_action_table(KIND_GENERATOR[kind])
    return _condense(action, kind)


def expand_to_actions(table: CoefficientTable) -> boundary.GeneratorActionTable:
    """Rebuild on-S_k module elements from a coefficient table."""
    entries = {k: SkeinElement.zero() for k in range(knot_module.Y_BASIS_DEGREE + 1)}
    for (k, j), entry in table.entries.items():
        unit = tpow(prefactor_exponent(table.kind, k, j))
        for i, c in entry.coeffs.items():
            scale = LaurentPoly.from_q(c) * unit
            entries[k] = entries[k] + SkeinElement.x_cheb(i, scale).mul_ypoly(
                chebyshev.cheb_S(j)
            )
    action = boundary.GeneratorActionTable(
        table.generator, entries, provenance=table.provenance
    )
    action.check()
    return action


# -- stored reference tables ------------------------------------------------


@lru_cache(maxsize=None)
def printed_table(kind: str) -> CoefficientTable:
    """Load the stored reference table shipped with the package."""
    if kind not in KINDS:
        raise InvariantViolation(f"unknown table kind {kind!r}")
    path = resources.files("skeinalg").joinpath(f"data/tables/{kind}.json")
    payload = json.loads(path.read_text())
    entries = {}
    for raw in payload["entries"]:
        entry = TableEntry(
            raw["k"],
            raw["j"],
            {
                int(i): parse_laurent(text, var="q")
                for i, text in raw["coeffs"].items()
            },
            status=raw.get("status", "expected-match"),
            note=raw.get("note", ""),
        )
        entries[(entry.k, entry.j)] = entry
    return CoefficientTable(kind, entries, provenance="printed")


# -- comparison --------------------------------------------------------------


@dataclass
class DiffEntry:
    k: int
    j: int
    status: str  # "match" | "mismatch"
    derived: dict
    printed: dict
    difference: dict
    printed_status: str = "expected-match"
    note: str = ""


class DiffReport:
    """Blockwise diff of a recomputed table against the stored one."""

    def __init__(self, generator, kind, entries):
        self.generator = generator
        self.kind = kind
        self.entries = entries

    @property
    def mismatches(self):
        return [e for e in self.entries if e.status == "mismatch"]

    def ok(self) -> bool:
        """True when every block marked expected-match actually matches."""
        return not any(
            e.status == "mismatch" and e.printed_status == "expected-match"
            for e in self.entries
        )

    def to_json(self) -> dict:
        return {
            "generator": list(self.generator),
            "entries": [
                {
                    "k": e.k,
                    "j": e.j,
                    "status": e.status,
                    "derived": e.derived,
                    "printed": e.printed,
                    "difference": e.difference,
                }
                for e in self.entries
            ],
        }

    def to_text(self) -> str:
        name = self.kind
        lines = [
            f"{name} table: recomputed action of {self.generator} vs stored table",
            "(the recomputed column is authoritative; it follows from the"
            " recursions alone)",
        ]
        for e in self.entries:
            tag = f"{name}[{e.k},{e.j}]"
            if e.status == "match":
                lines.append(f"  {tag}: match")
                continue
            lines.append(f"  {tag}: MISMATCH ({e.printed_status})")
            if e.note:
                lines.append(f"    note: {e.note}")
            for i in sorted(set(e.derived) | set(e.printed), key=int):
                d = e.derived.get(i, "0")
                p = e.printed.get(i, "0")
                if d != p:
                    sym = x_index_symbol(self.kind, int(i))
                    lines.append(f"    {sym}: recomputed {d}  |  stored {p}")
        counted = len(self.entries)
        bad = len(self.mismatches)
        lines.append(f"  {counted - bad}/{counted} blocks match")
        return "\n".join(lines) + "\n"


def _poly_map(entry: TableEntry) -> dict:
    return {str(i): format_laurent(c, var="q") for i, c in entry.nonzero().items()}


def compare_tables(derived, printed: CoefficientTable) -> DiffReport:
    """Diff a recomputed action table against the stored coefficients.

    ``derived`` may be a :class:`boundary.GeneratorActionTable` (the
    actions are condensed to coefficients first) or an already-extracted
    :class:`CoefficientTable`.
    """
    if isinstance(derived, boundary.GeneratorActionTable):
        derived = _condense(derived, printed.kind)
    keys = sorted(set(derived.entries) | set(printed.entries))
    entries = []
    for k, j in keys:
        dentry = derived.entry(k, j)
        pentry = printed.entry(k, j)
        dmap = _poly_map(dentry)
        pmap = _poly_map(pentry)
        diff = {}
        for i in sorted(set(dentry.coeffs) | set(pentry.coeffs)):
            delta = dentry.coeffs.get(i, LaurentPoly()) - pentry.coeffs.get(
                i, LaurentPoly()
            )
            if not delta.is_zero():
                diff[str(i)] = format_laurent(delta, var="q")
        entries.append(
            DiffEntry(
                k,
                j,
                "match" if not diff else "mismatch",
                dmap,
                pmap,
                diff,
                printed_status=pentry.status,
                note=pentry.note,
            )
        )
    return DiffReport(printed.generator, printed.kind, entries)


def export_all(fmt: str) -> str:
    """Export every (kind, provenance) table in one stream."""
    pairs = [
        (kind, prov) for kind in KINDS for prov in ("derived", "printed")
    ]
    objs = {
        (kind, prov): derived_table(kind) if prov == "derived" else printed_table(kind)
        for kind, prov in pairs
    }
    if fmt == "csv":
        lines = []
        for i, key in enumerate(pairs):
            rows = objs[key].to_csv().splitlines()
            lines.extend(rows if i == 0 else rows[1:])
        return "\n".join(lines) + "\n"
    if fmt == "latex":
        return "\n".join(objs[key].to_latex() for key in pairs)
    if fmt == "json":
        payload = {
            kind: {prov: objs[(kind, prov)].to_json() for prov in ("derived", "printed")}
            for kind in KINDS
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise InvariantViolation(f"unknown export format {fmt!r}")


def _condense(action: boundary.GeneratorActionTable, kind: str) -> CoefficientTable:
    entries = {}
    for k, element in sorted(action.entries.items()):
        for (a, b), c in sorted(element.to_cheb().items()):
            if c.is_zero():
                continue
            unit = tpow(prefactor_exponent(kind, k, b))
            entry = entries.setdefault((k, b), TableEntry(k, b, status="derived"))
            entry.coeffs[a] = c.div_by_unit(unit).to_q()
    return CoefficientTable(kind, entries, provenance=action.provenance)
