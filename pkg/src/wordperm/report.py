"""CSV and JSON renderings of complexity tables and suite reports.

Both formats are deterministic: rows are sorted by (word, n), suites by name,
JSON keys are sorted, and permutations are written in the parenthesized
one-line notation so they can be pasted back into ``parse_perm``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import specs
from .complexity import rho, tau, tau_doubled_tm_formula, tau_tm_formula
from .doubling import threshold_for
from .suites import SuiteReport
from .words import DEFAULT_HORIZON, Word, as_word, sturmian_run_parameter

SCHEMA = "wordperm.report/1"
CSV_COLUMNS = ["word", "n", "tau", "tau_even", "tau_odd", "rho", "formula", "match",
               "converged", "horizon"]


def formula_for(word: Word, n: int, horizon: int = DEFAULT_HORIZON) -> int | None:
    """The closed form for tau at length n, when one is known for this word."""
    spec = word.spec
    if specs.is_sturmian_spec(spec):
        return n
    if specs.is_thue_morse_spec(spec):
        return tau_tm_formula(n) if n >= 6 else None
    if isinstance(spec, specs.Doubled):
        inner = as_word(spec.inner)
        if specs.is_thue_morse_spec(spec.inner):
            return tau_doubled_tm_formula(n) if n >= 17 else None
        if specs.is_sturmian_spec(spec.inner):
            if n < 2 * threshold_for(inner, horizon):
                return None
            return n + 2 * sturmian_run_parameter(inner, horizon) + 1
    return None


@dataclass
class ComplexityRow:
    word: str
    n: int
    tau: int
    tau_even: int | None
    tau_odd: int | None
    rho: int
    formula: int | None
    converged: bool
    horizon: int

    @property
    def match(self) -> bool | None:
        return None if self.formula is None else self.formula == self.tau

    def as_dict(self) -> dict:
        return {"word": self.word, "n": self.n, "tau": self.tau, "tau_even": self.tau_even,
                "tau_odd": self.tau_odd, "rho": self.rho, "formula": self.formula,
                "match": self.match, "converged": self.converged, "horizon": self.horizon}


def complexity_rows(word, ns, horizon: int = DEFAULT_HORIZON,
                    split: bool | None = None) -> list[ComplexityRow]:
    word = as_word(word)
    rows = []
    for n in sorted(set(ns)):
        rep = tau(word, n, horizon, split)
        fs = rho(word, n, horizon)
        rows.append(ComplexityRow(word.name, n, rep.tau, rep.even_count, rep.odd_count,
                                  fs.count, formula_for(word, n, horizon),
                                  rep.converged and fs.converged, horizon))
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_csv(rows: list[ComplexityRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in sorted(rows, key=lambda r: (r.word, r.n)):
        d = row.as_dict()
        writer.writerow([_cell(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _plain(value):
    """JSON-safe copy: tuples become lists, dict keys strings."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def suite_record(report: SuiteReport) -> dict:
    return {
        "suite": report.suite,
        "word": report.word,
        "horizon": report.horizon,
        "status": report.status,
        "notes": list(report.notes),
        "rows": [{"n": r.n, "observed": _plain(r.observed), "expected": _plain(r.expected),
                  "status": r.status, "converged": r.converged, "detail": r.detail,
                  "counterexamples": list(r.counterexamples)}
                 for r in sorted(report.rows, key=lambda r: r.n)],
    }


def to_json(kind: str, body) -> str:
    doc = {"schema": SCHEMA, "kind": kind, "results": body}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def rows_to_json(rows: list[ComplexityRow]) -> str:
    return to_json("complexity", [r.as_dict() for r in sorted(rows, key=lambda r: (r.word, r.n))])


def suites_to_json(reports: list[SuiteReport]) -> str:
    ordered = sorted(reports, key=lambda r: (r.suite, r.word))
    return to_json("verify", [suite_record(r) for r in ordered])


def format_table(header: list[str], rows: list[list]) -> str:
    """Plain aligned text table."""
    cells = [[_cell(c) for c in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"
