"""Deterministic plain-text and CSV table rendering."""

from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence


def render_text(headers: Sequence[str], rows: Iterable[Sequence[str]],
                right_align: frozenset[int] | set[int] = frozenset()) -> str:
    """Aligned columns, two-space gutter, dashed rule under the header."""
    materialized = [list(map(str, row)) for row in rows]
    widths = [len(h) for h in headers]
    for row in materialized:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells: Sequence[str]) -> str:
        parts = []
        for i, cell in enumerate(cells):
            parts.append(cell.rjust(widths[i]) if i in right_align else cell.ljust(widths[i]))
        return "  ".join(parts).rstrip()

    lines = [fmt(headers), "  ".join("-" * w for w in widths)]
    lines.extend(fmt(row) for row in materialized)
    return "\n".join(lines) + "\n"


def render_csv(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    """RFC 4180 CSV (CRLF line endings, minimal quoting)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(list(map(str, row)))
    return buf.getvalue()
