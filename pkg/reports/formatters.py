"""
Report Formatters - Text, JSON and CSV Renderings of a ComparisonReport

All three are deterministic: keys are sorted and rows keep the order the
report was assembled in.
"""

import csv
import io
import json
from typing import List

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from .comparison_report import ComparisonReport

FORMATS = ('text', 'json', 'csv', 'pdf')


def _cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _columns(rows: List[dict]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _text_table(rows: List[dict]) -> List[str]:
    columns = _columns(rows)
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append('  '.join('-' * w for w in widths))
    lines.extend('  '.join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)
    return lines


def _length_rows(classes: List[dict]) -> List[dict]:
    """Squared length shown exactly, with the length as a decimal beside it."""
    rows = []
    for entry in classes:
        row = {'length_sq': f"{entry['length_sq']} ({entry['length']})"}
        row.update({k: v for k, v in entry.items() if k not in ('length_sq', 'length')})
        rows.append(row)
    return rows


def format_text(report: ComparisonReport) -> str:
    lines = [f"{report.name} (dimension {report.dimension})"]
    if report.verdict is not None:
        lines.append(f"verdict: {report.verdict}")
    for witness in report.witnesses:
        lines.append(f"witness: {json.dumps(witness, sort_keys=True)}")
    if report.classes:
        lines.append('')
        lines.extend(_text_table(_length_rows(report.classes)))
    if report.table:
        lines.append('')
        lines.extend(_text_table(report.table))
    return '\n'.join(lines) + '\n'


def format_json(report: ComparisonReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + '\n'


def format_csv(report: ComparisonReport) -> str:
    """Rows of the table, or of the classes for length commands."""
    rows = report.table or report.classes
    buffer = io.StringIO()
    if not rows:
        return ''
    writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def render(report: ComparisonReport, fmt: str = 'text') -> str:
    if fmt == 'json':
        return format_json(report)
    if fmt == 'csv':
        return format_csv(report)
    if fmt == 'text':
        return format_text(report)
    raise ValueError(f"Unknown text format '{fmt}'")
