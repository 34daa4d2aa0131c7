"""Serialize result sections as JSON lines, CSV or an aligned text table.

A section is a list of flat-ish records plus a summary.  All three formats
carry the same fields; nested values are JSON-encoded inside CSV and text
cells so nothing is dropped.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import IntEnum


class Status(IntEnum):
    # Ordered by severity; the exit code of a run is its worst section.
    CONSISTENT = 0
    INDETERMINATE = 3
    VIOLATION = 1

    @property
    def rank(self) -> int:
        return {Status.CONSISTENT: 0, Status.INDETERMINATE: 1, Status.VIOLATION: 2}[self]

    @property
    def label(self) -> str:
        return self.name.lower()


def worst(statuses) -> Status:
    return max(statuses, key=lambda s: s.rank, default=Status.CONSISTENT)


@dataclass
class Section:
    name: str
    records: list[dict]
    status: Status = Status.CONSISTENT
    summary: dict = field(default_factory=dict)
    columns: list[str] | None = None

    def summary_record(self) -> dict:
        return {"kind": "summary", "section": self.name, "status": self.status.label, "records": len(self.records), **self.summary}


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, (int, float)):
        return repr(value)
    return json.dumps(value, separators=(",", ":"))


def _columns(section: Section) -> list[str]:
    if section.columns:
        return section.columns
    cols: list[str] = []
    for rec in section.records:
        cols += [k for k in rec if k not in cols]
    return cols


def _overall(sections: list[Section]) -> dict:
    status = worst(s.status for s in sections)
    return {
        "kind": "summary",
        "section": "overall",
        "status": status.label,
        "sections": {s.name: s.status.label for s in sections},
    }


def to_json(sections: list[Section]) -> str:
    lines = []
    for s in sections:
        lines += [json.dumps({"kind": s.name, **r}) for r in s.records]
        lines.append(json.dumps(s.summary_record()))
    if len(sections) > 1:
        lines.append(json.dumps(_overall(sections)))
    return "\n".join(lines) + "\n"


def to_csv(sections: list[Section]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, s in enumerate(sections):
        if i:
            writer.writerow([])
        cols = _columns(s)
        writer.writerow(["# section", s.name])
        if cols:
            writer.writerow(cols)
        for r in s.records:
            writer.writerow([_cell(r.get(c, "")) for c in cols])
        writer.writerow(["# summary"])
        for k, v in s.summary_record().items():
            writer.writerow([k, _cell(v)])
    if len(sections) > 1:
        writer.writerow([])
        writer.writerow(["# summary"])
        for k, v in _overall(sections).items():
            writer.writerow([k, _cell(v)])
    return buf.getvalue()


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header).rstrip(), "  ".join("-" * w for w in widths)]
    out += [fmt.format(*r).rstrip() for r in rows]
    return out


def to_text(sections: list[Section]) -> str:
    lines: list[str] = []
    for s in sections:
        lines.append(f"== {s.name} [{s.status.label}]")
        cols = _columns(s)
        if s.records and cols:
            lines += _table(cols, [[_cell(r.get(c, "")) for c in cols] for r in s.records])
        for k, v in s.summary_record().items():
            lines.append(f"{k}: {_cell(v)}")
        lines.append("")
    if len(sections) > 1:
        for k, v in _overall(sections).items():
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines).rstrip("\n") + "\n"


WRITERS = {"json": to_json, "csv": to_csv, "text": to_text}


def emit(sections: list[Section], fmt: str) -> str:
    return WRITERS[fmt](sections)
