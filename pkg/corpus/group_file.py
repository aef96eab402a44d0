"""
Group Definition Files - Plain-Text Presentations of Bieberbach Groups

A definition lists a name, the dimension, the Gram matrix and one block
per generator (matrix rows, then the translation):

    # optional comment lines
    name klein_bottle
    dimension 2
    gram identity
    generator
      -1 0
      0 1
    translation 0 1/2
    end

A non-identity Gram matrix is written as `gram` followed by n rows.
emit_definition is deterministic, so emit → parse → emit is stable.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import Config
from core.exceptions import ParseError, TorsionViolation
from core.rational_matrix import RationalMatrix, format_rational, parse_rational
from groups.affine_element import AffineElement
from groups.bieberbach_group import BieberbachGroup, close_group
from groups.group_properties import torsion_free_check

logger = logging.getLogger(__name__)

GeneratorSpec = Tuple[Tuple[Tuple[int, ...], ...], Tuple[Fraction, ...]]


@dataclass
class GroupDefinition:
    """Unvalidated presentation as read from (or written to) a definition file."""
    name: str
    dimension: int
    generators: List[GeneratorSpec] = field(default_factory=list)
    gram: Optional[RationalMatrix] = None
    comments: List[str] = field(default_factory=list)

    @property
    def gram_matrix(self) -> RationalMatrix:
        return self.gram if self.gram is not None else RationalMatrix.identity(self.dimension)

    def elements(self) -> List[AffineElement]:
        return [AffineElement.create(rows, translation) for rows, translation in self.generators]

    def build(self, strict: Optional[bool] = None) -> BieberbachGroup:
        """
        Close and validate the presentation.

        Args:
            strict: Raise on a torsion failure instead of logging a warning
                (defaults to the FLATSPEC_STRICT setting).
        """
        strict = Config.STRICT_TORSION if strict is None else strict
        group = close_group(self.elements(), self.gram_matrix, name=self.name)
        report = torsion_free_check(group)
        if not report.passed:
            if strict:
                raise TorsionViolation(f"{self.name}: {report.message}")
            logger.warning("%s is not torsion free: %s", self.name, report.message)
        return group


# =============================================================================
# PARSING
# =============================================================================

class _Lines:
    """Numbered, comment-stripped lines with one-token lookahead."""

    def __init__(self, text: str):
        self.items: List[Tuple[int, str]] = []
        self.comments: List[str] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if stripped.startswith('#'):
                self.comments.append(stripped[1:].strip())
                continue
            if stripped:
                self.items.append((number, stripped))
        self.position = 0

    def peek(self) -> Optional[Tuple[int, str]]:
        return self.items[self.position] if self.position < len(self.items) else None

    def next(self, expected: str) -> Tuple[int, str]:
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"Unexpected end of file, expected {expected}", line=last, field=expected)
        self.position += 1
        return item


def _keyword(lines: _Lines, keyword: str) -> Tuple[int, List[str]]:
    number, text = lines.next(keyword)
    tokens = text.split()
    if tokens[0] != keyword:
        raise ParseError(f"Expected '{keyword}', found '{tokens[0]}'", line=number, field=keyword)
    return number, tokens[1:]


def _rationals(number: int, tokens: Sequence[str], n: int, field_name: str) -> Tuple[Fraction, ...]:
    if len(tokens) != n:
        raise ParseError(f"Expected {n} entries, found {len(tokens)}", line=number, field=field_name)
    try:
        return tuple(parse_rational(token) for token in tokens)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), line=number, field=field_name) from None


def _matrix_rows(lines: _Lines, n: int, field_name: str, integral: bool) -> Tuple[Tuple, ...]:
    rows = []
    for _ in range(n):
        number, text = lines.next(field_name)
        row = _rationals(number, text.split(), n, field_name)
        if integral:
            if any(x.denominator != 1 for x in row):
                raise ParseError("Matrix entries must be integers", line=number, field=field_name)
            row = tuple(int(x) for x in row)
        rows.append(row)
    return tuple(rows)


def parse_definition(text: str) -> GroupDefinition:
    """
    Parse definition text.

    Raises:
        ParseError: with the offending line and field.
    """
    lines = _Lines(text)
    number, tokens = _keyword(lines, 'name')
    if len(tokens) != 1:
        raise ParseError("Name must be a single token", line=number, field='name')
    name = tokens[0]

    number, tokens = _keyword(lines, 'dimension')
    try:
        n = int(tokens[0]) if len(tokens) == 1 else -1
    except ValueError:
        n = -1
    if n < 1:
        raise ParseError("Dimension must be a positive integer", line=number, field='dimension')

    number, tokens = _keyword(lines, 'gram')
    gram = None
    if tokens == ['identity']:
        gram = None
    elif not tokens:
        gram = RationalMatrix(_matrix_rows(lines, n, 'gram', integral=False))
    else:
        raise ParseError("Expected 'gram identity' or a bare 'gram' line", line=number, field='gram')

    generators: List[GeneratorSpec] = []
    while True:
        item = lines.peek()
        if item is None:
            raise ParseError("Missing 'end'", line=lines.items[-1][0], field='end')
        number, text = item
        keyword = text.split()[0]
        if keyword == 'end':
            lines.next('end')
            break
        if keyword != 'generator':
            raise ParseError(f"Expected 'generator' or 'end', found '{keyword}'", line=number, field='generator')
        lines.next('generator')
        rows = _matrix_rows(lines, n, 'matrix', integral=True)
        number, tokens = _keyword(lines, 'translation')
        generators.append((rows, _rationals(number, tokens, n, 'translation')))

    trailing = lines.peek()
    if trailing is not None:
        raise ParseError("Content after 'end'", line=trailing[0])
    return GroupDefinition(
        name=name, dimension=n, generators=generators, gram=gram, comments=lines.comments,
    )


def parse_group(path: str, strict: Optional[bool] = None) -> BieberbachGroup:
    """Read, close and validate the group defined in a file."""
    with open(path, encoding='utf-8') as handle:
        return parse_definition(handle.read()).build(strict)


# =============================================================================
# EMITTING
# =============================================================================

def _format_row(row: Sequence) -> str:
    return ' '.join(format_rational(Fraction(x)) for x in row)


def emit_definition(definition: GroupDefinition) -> str:
    out = [f"# {comment}" if comment else "#" for comment in definition.comments]
    out.append(f"name {definition.name}")
    out.append(f"dimension {definition.dimension}")
    if definition.gram is None or definition.gram.is_identity():
        out.append("gram identity")
    else:
        out.append("gram")
        out.extend(f"  {_format_row(row)}" for row in definition.gram.rows)
    for rows, translation in definition.generators:
        out.append("generator")
        out.extend(f"  {_format_row(row)}" for row in rows)
        out.append(f"translation {_format_row(translation)}")
    out.append("end")
    return '\n'.join(out) + '\n'
