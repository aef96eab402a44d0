"""
Report Generation Module
"""

from .comparison_report import (
    ComparisonReport, compare_groups, info_report, lengths_report, spectrum_report, zeta_report,
)
from .formatters import FORMATS, format_csv, format_json, format_text, render
from .pdf_generator import PDFReportGenerator

__all__ = [
    'ComparisonReport', 'compare_groups', 'info_report', 'lengths_report',
    'spectrum_report', 'zeta_report', 'FORMATS', 'format_csv', 'format_json',
    'format_text', 'render', 'PDFReportGenerator',
]
