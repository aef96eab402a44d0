"""
PDF Report Generator - Printable Isospectrality Comparison Reports

Renders a ComparisonReport (verdict banner, witnesses, class and verdict
tables) with reportlab.
"""

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib.units import cm
from reportlab.platypus import (
    SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle, HRFlowable
)
from reportlab.lib.enums import TA_CENTER
from datetime import datetime
from typing import List, Optional
import io
import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import REPORT_CONFIG, VERDICT_COLORS
from .comparison_report import ComparisonReport
from .formatters import _cell, _columns, _length_rows


class PDFReportGenerator:
    """Builds PDF documents from comparison and single-group reports."""

    def __init__(self):
        self.styles = getSampleStyleSheet()
        self._create_custom_styles()

    def _create_custom_styles(self):
        self.styles.add(ParagraphStyle(
            name='ReportTitle',
            parent=self.styles['Heading1'],
            fontSize=20,
            spaceAfter=20,
            alignment=TA_CENTER,
            textColor=colors.HexColor('#1e3a5f')
        ))

        self.styles.add(ParagraphStyle(
            name='SectionHeading',
            parent=self.styles['Heading2'],
            fontSize=13,
            spaceBefore=16,
            spaceAfter=8,
            textColor=colors.HexColor('#2d5a87')
        ))

        self.styles.add(ParagraphStyle(
            name='ReportBody',
            parent=self.styles['Normal'],
            fontSize=9,
            spaceBefore=4,
            spaceAfter=4,
        ))

        self.styles.add(ParagraphStyle(
            name='VerdictBanner',
            parent=self.styles['Normal'],
            fontSize=16,
            alignment=TA_CENTER,
            fontName='Helvetica-Bold',
            textColor=colors.white
        ))

    def generate_report(self, report: ComparisonReport,
                        title: Optional[str] = None) -> bytes:
        """
        Generate the PDF for one report.

        Returns:
            PDF file as bytes
        """
        buffer = io.BytesIO()
        doc = SimpleDocTemplate(
            buffer,
            pagesize=A4,
            rightMargin=2*cm,
            leftMargin=2*cm,
            topMargin=2*cm,
            bottomMargin=2*cm
        )

        story = []
        story.extend(self._create_header(report, title or REPORT_CONFIG['report_title']))
        if report.verdict is not None:
            story.extend(self._create_verdict_banner(report.verdict))
            story.append(Spacer(1, 12))
        if report.witnesses:
            story.extend(self._create_witnesses(report.witnesses))
        if report.classes:
            story.append(Paragraph("Closed geodesic classes", self.styles['SectionHeading']))
            story.append(self._create_table(_length_rows(report.classes)))
        if report.table:
            story.append(Paragraph("Results", self.styles['SectionHeading']))
            story.append(self._create_table(report.table, verdict_column='verdict'))
        story.extend(self._create_footer())

        doc.build(story)
        pdf_bytes = buffer.getvalue()
        buffer.close()
        return pdf_bytes

    def _create_header(self, report: ComparisonReport, title: str) -> list:
        elements = [Paragraph(title, self.styles['ReportTitle'])]
        elements.append(Paragraph(
            f"<i>{REPORT_CONFIG['organization_name']}</i>",
            ParagraphStyle(
                'Subtitle',
                parent=self.styles['Normal'],
                fontSize=11,
                alignment=TA_CENTER,
                textColor=colors.gray
            )
        ))
        elements.append(HRFlowable(
            width="100%",
            thickness=2,
            color=colors.HexColor('#2d5a87'),
            spaceAfter=12
        ))

        data = [
            ['Groups:', report.name],
            ['Dimension:', str(report.dimension)],
            ['Mode:', report.mode or '-'],
        ]
        table = Table(data, colWidths=[3*cm, 12*cm])
        table.setStyle(TableStyle([
            ('FONTNAME', (0, 0), (0, -1), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 10),
            ('TEXTCOLOR', (0, 0), (0, -1), colors.HexColor('#2d5a87')),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 4),
        ]))
        elements.append(table)
        return elements

    def _create_verdict_banner(self, verdict: str) -> list:
        color = VERDICT_COLORS.get(verdict, VERDICT_COLORS['not_applicable'])
        banner = Table(
            [[Paragraph(verdict.replace('_', ' ').upper(), self.styles['VerdictBanner'])]],
            colWidths=[15*cm]
        )
        banner.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, -1), colors.HexColor(color)),
            ('TOPPADDING', (0, 0), (-1, -1), 10),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 10),
        ]))
        return [Spacer(1, 12), banner]

    def _create_witnesses(self, witnesses: List[dict]) -> list:
        elements = [Paragraph("First divergences", self.styles['SectionHeading'])]
        for witness in witnesses:
            elements.append(Paragraph(json.dumps(witness, sort_keys=True), self.styles['ReportBody']))
        return elements

    def _create_table(self, rows: List[dict], verdict_column: Optional[str] = None) -> Table:
        columns = _columns(rows)
        data = [columns] + [[_cell(row.get(c)) for c in columns] for row in rows]
        table = Table(data, repeatRows=1)
        style = self._get_table_style()
        if verdict_column in columns:
            index = columns.index(verdict_column)
            for r, row in enumerate(rows, start=1):
                color = VERDICT_COLORS.get(row.get(verdict_column))
                if color:
                    style.add('TEXTCOLOR', (index, r), (index, r), colors.HexColor(color))
        table.setStyle(style)
        return table

    def _create_footer(self) -> list:
        elements = [HRFlowable(
            width="100%",
            thickness=1,
            color=colors.gray,
            spaceBefore=20
        )]
        stamp = ''
        if REPORT_CONFIG['include_timestamp']:
            stamp = f"Report generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} | "
        elements.append(Paragraph(
            f"<i>{stamp}{REPORT_CONFIG['organization_name']}</i>",
            ParagraphStyle(
                'Footer',
                parent=self.styles['Normal'],
                fontSize=8,
                alignment=TA_CENTER,
                textColor=colors.gray
            )
        ))
        return elements

    def _get_table_style(self) -> TableStyle:
        return TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#2d5a87')),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
            ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
            ('BOTTOMPADDING', (0, 0), (-1, 0), 6),
            ('TOPPADDING', (0, 0), (-1, 0), 6),
            ('BACKGROUND', (0, 1), (-1, -1), colors.HexColor('#f8fafc')),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#e2e8f0')),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
        ])

    def save_report(self, pdf_bytes: bytes, filepath: str) -> None:
        with open(filepath, 'wb') as f:
            f.write(pdf_bytes)
