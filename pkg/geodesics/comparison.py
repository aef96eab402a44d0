"""
Length Spectrum Comparison - L, [L], L_c and [L_c] Verdicts up to a Cutoff
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import GEODESIC_CONFIG
from core.polynomials import format_polynomial
from core.rational_matrix import format_rational, parse_rational
from groups.bieberbach_group import BieberbachGroup
from .conjugacy_classes import LengthSpectrumReport, conjugacy_classes

COMPARISON_MODES = ('weak', 'counted', 'complex-weak', 'complex-counted')


@dataclass
class LengthComparison:
    """Verdict with the smallest differing key and the two values there."""
    mode: str
    cutoff: Fraction
    equal: bool
    divergence: Optional[Tuple[Tuple, int, int]] = None

    def to_dict(self) -> dict:
        witness = None
        if self.divergence is not None:
            (length, poly), a, b = self.divergence
            witness = {
                'length_sq': format_rational(length),
                'holonomy': format_polynomial(poly) if poly else None,
                'a': a,
                'b': b,
            }
        return {
            'mode': self.mode,
            'cutoff': format_rational(self.cutoff),
            'equal': self.equal,
            'divergence': witness,
        }


def spectrum_counts(report: LengthSpectrumReport, weak: bool) -> Dict[Tuple, int]:
    """key ↦ count, or key ↦ 1 when multiplicities are forgotten."""
    counts: Dict[Tuple, int] = {}
    for c in report.classes:
        counts[c.key] = counts.get(c.key, 0) + c.count
    if weak:
        return {key: 1 for key in counts}
    return counts


def first_divergence(counts_a: Dict[Tuple, int],
                     counts_b: Dict[Tuple, int]) -> Optional[Tuple[Tuple, int, int]]:
    for key in sorted(set(counts_a) | set(counts_b)):
        a, b = counts_a.get(key, 0), counts_b.get(key, 0)
        if a != b:
            return key, a, b
    return None


def compare_length_spectra(group_a: BieberbachGroup, group_b: BieberbachGroup,
                           cutoff_sq=None, mode: str = 'counted') -> LengthComparison:
    """
    Compare length spectra up to cutoff_sq.

    Args:
        mode: 'weak' (L), 'counted' ([L]), 'complex-weak' (L_c) or
            'complex-counted' ([L_c]).
    """
    if mode not in COMPARISON_MODES:
        raise ValueError(f"Unknown comparison mode '{mode}'")
    if group_a.dimension != group_b.dimension:
        raise ValueError(
            f"Cannot compare groups of dimension {group_a.dimension} and {group_b.dimension}"
        )
    cutoff = parse_rational(cutoff_sq if cutoff_sq is not None else GEODESIC_CONFIG['default_cutoff_sq'])
    class_mode = 'complex' if mode.startswith('complex') else 'counted'
    weak = mode.endswith('weak')

    counts_a = spectrum_counts(conjugacy_classes(group_a, cutoff, class_mode), weak)
    counts_b = spectrum_counts(conjugacy_classes(group_b, cutoff, class_mode), weak)
    divergence = first_divergence(counts_a, counts_b)
    return LengthComparison(mode=mode, cutoff=cutoff, equal=divergence is None, divergence=divergence)
