"""Deterministic serialization of verification reports.

Exact quantities render as fraction strings ("-1/18", "0"); approximate ones
as 30-significant-digit decimals with an explicit "+/-" bound.  All three
formats (json, csv, text) are byte-identical across runs for the same input.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import gmpy2

from .identities import EXACT, VerificationReport
from .trig import ApproxReal

SIG_DIGITS = 30


def decimal_string(x, digits: int = SIG_DIGITS) -> str:
    """Fixed-width scientific decimal of an mpfr value, deterministic."""
    if x == 0:
        return "0"
    s, e, _ = gmpy2.digits(x, 10, digits)
    neg = s.startswith("-")
    ds = s.lstrip("-")
    return f"{'-' if neg else ''}{ds[0]}.{ds[1:]}e{e - 1:+03d}"


def render_value(v) -> str:
    if isinstance(v, ApproxReal):
        return f"{decimal_string(v.value)} +/- {v.bound:.2e}"
    return str(Fraction(v))


def _render_metric(verdict, x: Fraction) -> str:
    if verdict.exactness == EXACT:
        return str(x)
    if x == 0:
        return "0"
    return f"{float(x):.3e}"


def _params_str(params) -> str:
    return " ".join(f"{name}={value}" for name, value in params)


def _rows(report: VerificationReport):
    for v in report.verdicts:
        yield {
            "identity": v.identity,
            "params": _params_str(v.params),
            "lhs": render_value(v.lhs),
            "rhs": render_value(v.rhs),
            "residual": _render_metric(v, v.residual),
            "scale": _render_metric(v, v.scale),
            "status": v.status,
            "corrected_status": v.corrected_status or "",
        }


def _emit_json(report: VerificationReport) -> str:
    objects = []
    for v in report.verdicts:
        obj = {
            "identity": v.identity,
            "params": dict(v.params),
            "lhs": render_value(v.lhs),
            "rhs": render_value(v.rhs),
            "residual": _render_metric(v, v.residual),
            "scale": _render_metric(v, v.scale),
            "status": v.status,
        }
        if v.corrected_status is not None:
            obj["corrected_status"] = v.corrected_status
        objects.append(obj)
    return json.dumps(objects, indent=2) + "\n"


_CSV_COLUMNS = (
    "identity",
    "params",
    "lhs",
    "rhs",
    "residual",
    "scale",
    "status",
    "corrected_status",
)


def _emit_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in _rows(report):
        writer.writerow([row[c] for c in _CSV_COLUMNS])
    return buf.getvalue()


def _emit_text(report: VerificationReport) -> str:
    rows = list(_rows(report))
    lines = []
    if rows:
        cols = ("identity", "params", "status", "corrected_status", "residual", "scale")
        headers = ("identity", "params", "status", "corrected", "residual", "scale")
        widths = [
            max(len(h), *(len(r[c]) for r in rows)) for h, c in zip(headers, cols)
        ]
        lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for r in rows:
            lines.append(
                "  ".join(r[c].ljust(w) for c, w in zip(cols, widths)).rstrip()
            )
    else:
        lines.append("(no verdicts)")
    lines.append("")
    lines.append(f"precision: {report.precision} bits    scope: {report.scope}")
    lines.append("per-identity counts (PASS/FAIL/INCONCLUSIVE):")
    for ident, counts in report.summary().items():
        lines.append(
            f"  {ident}: {counts['PASS']}/{counts['FAIL']}/{counts['INCONCLUSIVE']}"
        )
    errata = report.errata()
    lines.append(f"errata (printed forms failing on their domain): {', '.join(errata) if errata else 'none'}")
    for key, finding in report.adjudications().items():
        lines.append(f"adjudication {key}: {finding}")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "text") -> str:
    """Serialize a report as 'json', 'csv', or 'text'."""
    if fmt == "json":
        return _emit_json(report)
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "text":
        return _emit_text(report)
    raise ValueError(f"unknown report format {fmt!r}; expected json, csv, or text")
