"""
Comparison Report - Verdicts, Witnesses and Tables for Every Command

Every command assembles one ComparisonReport. Single-group commands
leave `verdict` as None; comparisons set it to 'equal' or 'divergent'
and list first-divergence witnesses that can be re-checked by running
the underlying operation again.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import GEODESIC_CONFIG, SPECTRUM_CONFIG
from core.exceptions import NotDiagonalType
from core.polynomials import format_polynomial
from core.rational_matrix import format_rational, parse_rational
from corpus.isospectral_pairs import IsospectralPair
from geodesics.comparison import COMPARISON_MODES, compare_length_spectra, spectrum_counts
from geodesics.conjugacy_classes import conjugacy_classes
from geodesics.length_engine import injectivity_radius_sq
from groups.bieberbach_group import BieberbachGroup
from groups.group_properties import (
    determinant_parity_holds, diagonal_type_label, fixed_dimensions, is_diagonal_type,
    is_orientable, torsion_free_check,
)
from spectra.comparison import compare_p_spectra
from spectra.spectrum_engine import betti_numbers, spectrum_table
from spectra.sunada import (
    bijection_certificate, diagonal_isospectrality_criterion, sunada_isospectral, sunada_numbers,
)
from zeta.asymptotics import asymptotic_terms
from zeta.zeta_engine import poisson_check

logger = logging.getLogger(__name__)

EQUAL = 'equal'
DIVERGENT = 'divergent'
NOT_APPLICABLE = 'not_applicable'

COMPARE_MODES = (
    'weak', 'counted', 'complex', 'complex-weak', 'complex-counted',
    'sunada', 'p-spectrum', 'criterion', 'table',
)


@dataclass
class ComparisonReport:
    """Output of one command; to_dict is the stable JSON schema."""
    name: str
    dimension: int
    verdict: Optional[str] = None
    witnesses: List[dict] = field(default_factory=list)
    classes: List[dict] = field(default_factory=list)
    table: List[dict] = field(default_factory=list)
    mode: str = ''

    @property
    def exit_code(self) -> int:
        return 2 if self.verdict in (DIVERGENT, NOT_APPLICABLE) else 0

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'dimension': self.dimension,
            'verdict': self.verdict,
            'witnesses': self.witnesses,
            'classes': self.classes,
            'table': self.table,
        }


def _verdict(equal: bool) -> str:
    return EQUAL if equal else DIVERGENT


def _pair_name(group_a: BieberbachGroup, group_b: BieberbachGroup) -> str:
    return f"{group_a.name or 'A'} vs {group_b.name or 'B'}"


def degree_list(p, dimension: int) -> List[int]:
    """'all' or None → 0..n, otherwise the single degree."""
    if p is None or p == 'all':
        return list(range(dimension + 1))
    return [int(p)]


# =============================================================================
# SINGLE-GROUP REPORTS
# =============================================================================

def info_report(group: BieberbachGroup) -> ComparisonReport:
    torsion = torsion_free_check(group)
    rows = [
        ('holonomy_order', group.holonomy_order),
        ('orientable', is_orientable(group)),
        ('diagonal_type', diagonal_type_label(group)),
        ('torsion_free', torsion.passed),
        ('determinant_parity', determinant_parity_holds(group)),
        ('fixed_dimensions', ' '.join(str(d) for d in fixed_dimensions(group))),
        ('betti_numbers', ' '.join(str(b) for b in betti_numbers(group))),
    ]
    if torsion.passed:
        rows.append(('injectivity_radius_sq', format_rational(injectivity_radius_sq(group))))
    return ComparisonReport(
        name=group.name,
        dimension=group.dimension,
        table=[{'property': key, 'value': value} for key, value in rows],
        mode='info',
    )


def spectrum_report(group: BieberbachGroup, p=None, mu_max=None) -> ComparisonReport:
    limit = parse_rational(mu_max if mu_max is not None else SPECTRUM_CONFIG['default_mu_max'])
    rows = []
    for degree in degree_list(p, group.dimension):
        for mu, d in spectrum_table(group, degree, limit).items():
            rows.append({'p': degree, 'mu': format_rational(mu), 'multiplicity': d})
    return ComparisonReport(name=group.name, dimension=group.dimension, table=rows, mode='spectrum')


def lengths_report(group: BieberbachGroup, cutoff_sq=None, mode: str = 'counted',
                   include_zero: Optional[bool] = None) -> ComparisonReport:
    include_zero = GEODESIC_CONFIG['include_zero_length'] if include_zero is None else include_zero
    report = conjugacy_classes(group, cutoff_sq, mode)
    if not include_zero:
        report = report.without_zero()
    classes = [c.to_dict() for c in report.classes]
    if mode == 'weak':
        for entry in classes:
            entry.pop('count')
    return ComparisonReport(
        name=group.name, dimension=group.dimension, classes=classes, mode=f"lengths-{mode}",
    )


def zeta_report(group: BieberbachGroup, p=None, s_values: Optional[Sequence[float]] = None,
                tolerance: Optional[float] = None) -> ComparisonReport:
    """Poisson identity at each s; verdict is 'equal' iff both sides agree everywhere."""
    rows = []
    for degree in degree_list(p, group.dimension):
        check = poisson_check(group, degree, s_values, tolerance)
        rows.extend(evaluation.to_dict() for evaluation in check.evaluations)
    witnesses = []
    if is_diagonal_type(group) and group.gram.is_identity():
        for degree in degree_list(p, group.dimension):
            terms = asymptotic_terms(group, degree)
            if terms:
                witnesses.append({'p': degree, 'leading_term': terms[0].to_dict()})
    passed = all(row['passed'] for row in rows)
    return ComparisonReport(
        name=group.name, dimension=group.dimension, verdict=_verdict(passed),
        witnesses=witnesses, table=rows, mode='zeta',
    )


# =============================================================================
# COMPARISONS
# =============================================================================

def _length_classes(group_a: BieberbachGroup, group_b: BieberbachGroup, cutoff: Fraction,
                    mode: str) -> List[dict]:
    """Side-by-side class counts keyed by (squared length, holonomy)."""
    class_mode = 'complex' if mode.startswith('complex') else 'counted'
    weak = mode.endswith('weak')
    counts_a = spectrum_counts(conjugacy_classes(group_a, cutoff, class_mode), weak)
    counts_b = spectrum_counts(conjugacy_classes(group_b, cutoff, class_mode), weak)
    rows = []
    for length, poly in sorted(set(counts_a) | set(counts_b)):
        key = (length, poly)
        rows.append({
            'length_sq': format_rational(length),
            'length': f"{float(length) ** 0.5:.6f}",
            'holonomy': format_polynomial(poly) if poly else None,
            'a': counts_a.get(key, 0),
            'b': counts_b.get(key, 0),
        })
    return rows


def compare_lengths(group_a: BieberbachGroup, group_b: BieberbachGroup, cutoff_sq=None,
                    mode: str = 'counted') -> ComparisonReport:
    mode = 'complex-counted' if mode == 'complex' else mode
    if mode not in COMPARISON_MODES:
        raise ValueError(f"Unknown length comparison mode '{mode}'")
    comparison = compare_length_spectra(group_a, group_b, cutoff_sq, mode)
    witness = comparison.to_dict()['divergence']
    return ComparisonReport(
        name=_pair_name(group_a, group_b),
        dimension=group_a.dimension,
        verdict=_verdict(comparison.equal),
        witnesses=[witness] if witness else [],
        classes=_length_classes(group_a, group_b, comparison.cutoff, mode),
        mode=mode,
    )


def compare_p_spectrum(group_a: BieberbachGroup, group_b: BieberbachGroup, p=None,
                       mu_max=None) -> ComparisonReport:
    rows, witnesses = [], []
    for degree in degree_list(p, group_a.dimension):
        comparison = compare_p_spectra(group_a, group_b, degree, mu_max).to_dict()
        rows.append(comparison)
        if comparison['divergence']:
            witnesses.append({'p': degree, **comparison['divergence']})
    return ComparisonReport(
        name=_pair_name(group_a, group_b),
        dimension=group_a.dimension,
        verdict=_verdict(not witnesses),
        witnesses=witnesses,
        table=rows,
        mode='p-spectrum',
    )


def compare_sunada(group_a: BieberbachGroup, group_b: BieberbachGroup) -> ComparisonReport:
    """
    Raises:
        NotDiagonalType: unless both groups are of diagonal type.
    """
    table_a, table_b = sunada_numbers(group_a), sunada_numbers(group_b)
    keys = sorted({(d, t) for d, t, _ in table_a.nonzero()} | {(d, t) for d, t, _ in table_b.nonzero()})
    rows = [{'d': d, 't': t, 'a': table_a.count(d, t), 'b': table_b.count(d, t)} for d, t in keys]
    witnesses = [row for row in rows if row['a'] != row['b']][:1]
    return ComparisonReport(
        name=_pair_name(group_a, group_b),
        dimension=group_a.dimension,
        verdict=_verdict(table_a == table_b),
        witnesses=witnesses,
        table=rows,
        mode='sunada',
    )


def compare_criterion(group_a: BieberbachGroup, group_b: BieberbachGroup, p=None) -> ComparisonReport:
    rows, witnesses = [], []
    for degree in degree_list(p, group_a.dimension):
        verdict = diagonal_isospectrality_criterion(group_a, group_b, degree)
        pairing = bijection_certificate(group_a, group_b, degree) if verdict.isospectral else None
        rows.append({
            'p': degree,
            'isospectral': verdict.isospectral,
            'bijection': [list(pair) for pair in pairing] if pairing else None,
        })
        if verdict.certificate:
            witnesses.append({'p': degree, **verdict.certificate[0]})
    return ComparisonReport(
        name=_pair_name(group_a, group_b),
        dimension=group_a.dimension,
        verdict=_verdict(not witnesses),
        witnesses=witnesses,
        table=rows,
        mode='criterion',
    )


def matching_degrees(group_a: BieberbachGroup, group_b: BieberbachGroup,
                     mu_max=None) -> List[int]:
    """Degrees p with equal p-spectra: exact for diagonal pairs, up to mu_max otherwise."""
    n = group_a.dimension
    if is_diagonal_type(group_a) and is_diagonal_type(group_b) \
            and group_a.gram.is_identity() and group_b.gram.is_identity():
        return [p for p in range(n + 1) if diagonal_isospectrality_criterion(group_a, group_b, p).isospectral]
    return [p for p in range(n + 1) if compare_p_spectra(group_a, group_b, p, mu_max).equal]


def compare_table(group_a: BieberbachGroup, group_b: BieberbachGroup,
                  pair: Optional[IsospectralPair] = None, cutoff_sq=None,
                  mu_max=None) -> ComparisonReport:
    """
    Every verdict column for one pair; expected verdicts are echoed from
    the matching table row when there is one.
    """
    mu_bound = mu_max if mu_max is not None else (pair.spectrum_mu if pair else SPECTRUM_CONFIG['default_mu_max'])
    cutoff = parse_rational(
        cutoff_sq if cutoff_sq is not None
        else (pair.length_cutoff if pair else GEODESIC_CONFIG['default_cutoff_sq'])
    )
    expected: Dict[str, Optional[bool]] = pair.expected() if pair else {}

    observed: Dict[str, str] = {}
    details: Dict[str, object] = {}
    degrees = matching_degrees(group_a, group_b, mu_bound)
    observed['some_p'] = _verdict(bool(degrees))
    details['some_p'] = ' '.join(str(p) for p in degrees)
    try:
        observed['sunada'] = _verdict(sunada_isospectral(group_a, group_b))
    except NotDiagonalType:
        observed['sunada'] = NOT_APPLICABLE
    for mode in ('counted', 'weak', 'complex-counted', 'complex-weak'):
        comparison = compare_length_spectra(group_a, group_b, cutoff, mode)
        observed[mode] = _verdict(comparison.equal)
        details[mode] = comparison.to_dict()['divergence']

    rows, witnesses = [], []
    for column, verdict in observed.items():
        claim = expected.get(column)
        matches = None if claim is None else (verdict == EQUAL) == claim
        rows.append({
            'column': column,
            'verdict': verdict,
            'expected': None if claim is None else _verdict(claim),
            'matches': matches,
        })
        if details.get(column) and verdict == DIVERGENT:
            witnesses.append({'column': column, 'divergence': details[column]})
        if matches is False:
            logger.warning("%s: column %s gave %s", _pair_name(group_a, group_b), column, verdict)
    rows.append({'column': 'isospectral_degrees', 'verdict': details['some_p'],
                 'expected': None, 'matches': None})

    all_equal = all(verdict == EQUAL for verdict in observed.values())
    return ComparisonReport(
        name=_pair_name(group_a, group_b),
        dimension=group_a.dimension,
        verdict=_verdict(all_equal),
        witnesses=witnesses,
        table=rows,
        mode='table',
    )


def compare_groups(group_a: BieberbachGroup, group_b: BieberbachGroup, mode: str = 'counted',
                   p=None, mu_max=None, cutoff_sq=None,
                   pair: Optional[IsospectralPair] = None) -> ComparisonReport:
    """Dispatch a compare command to the operation behind its mode."""
    if mode not in COMPARE_MODES:
        raise ValueError(f"Unknown compare mode '{mode}'; choose from {', '.join(COMPARE_MODES)}")
    if group_a.dimension != group_b.dimension:
        raise ValueError(
            f"Cannot compare groups of dimension {group_a.dimension} and {group_b.dimension}"
        )
    logger.info("compare %s mode=%s", _pair_name(group_a, group_b), mode)
    if mode == 'p-spectrum':
        return compare_p_spectrum(group_a, group_b, p, mu_max)
    if mode == 'sunada':
        return compare_sunada(group_a, group_b)
    if mode == 'criterion':
        return compare_criterion(group_a, group_b, p)
    if mode == 'table':
        return compare_table(group_a, group_b, pair, cutoff_sq, mu_max)
    return compare_lengths(group_a, group_b, cutoff_sq, mode)


def reproduce_verdict_table(pairs: Sequence[IsospectralPair], resolve) -> ComparisonReport:
    """
    Run compare_table on each pair and flatten the columns into one table.

    Args:
        resolve: corpus name → BieberbachGroup.
    """
    rows, witnesses = [], []
    dimension = 0
    for pair in pairs:
        report = compare_table(resolve(pair.gamma), resolve(pair.gammap), pair)
        dimension = max(dimension, report.dimension)
        for row in report.table:
            rows.append({'example': pair.key, **row})
            if row['matches'] is False:
                witnesses.append({'example': pair.key, 'column': row['column'], 'verdict': row['verdict']})
    return ComparisonReport(
        name='verdict table',
        dimension=dimension,
        verdict=_verdict(not witnesses),
        witnesses=witnesses,
        table=rows,
        mode='table',
    )
