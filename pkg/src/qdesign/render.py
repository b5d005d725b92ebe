"""Text, CSV, JSON and DOT rendering of command results."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .qpoly import QPolynomial

FORMATS = ("text", "csv", "json", "dot")
STYLES = ("factored", "expanded")


class RenderError(ValueError):
    pass


def fmt_scalar(x, style: str = "factored") -> str:
    if isinstance(x, QPolynomial):
        if style == "expanded" or x.is_zero():
            return x.expanded()
        return x.factored()
    return str(x)


def json_scalar(x, style: str = "expanded"):
    """Integers stay integers; polynomials become exact strings."""
    if isinstance(x, QPolynomial):
        return fmt_scalar(x, style)
    return x


@dataclass
class Table:
    header: list[str]
    rows: list[list[str]] = field(default_factory=list)

    def aligned(self) -> str:
        cols = [self.header] + self.rows
        widths = [max(len(r[i]) for r in cols) for i in range(len(self.header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines)

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    table: Table | None = None
    data: dict | list | None = None
    dot: str | None = None
    raw: str | None = None  # verbatim text output, e.g. a design file


def render(report: Report, fmt: str = "text") -> str:
    if fmt == "dot":
        if report.dot is None:
            raise RenderError("dot output is only available for graph results")
        return report.dot
    if fmt == "csv":
        if report.table is None:
            raise RenderError("this result has no tabular form")
        return report.table.csv()
    if fmt == "json":
        payload = report.data if report.data is not None else {"lines": report.lines}
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "text":
        raise RenderError(f"unknown format {fmt!r}")
    if report.raw is not None:
        return report.raw
    parts = list(report.lines)
    if report.table is not None:
        if parts:
            parts.append("")
        parts.append(report.table.aligned())
    return "\n".join(parts) + "\n"
