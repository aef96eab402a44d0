"""
Spectrum Comparison - p-Isospectrality Probes up to a Cutoff
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import SPECTRUM_CONFIG
from core.lattice_enumerator import shell_counts
from core.rational_matrix import format_rational, parse_rational
from groups.bieberbach_group import BieberbachGroup
from .spectrum_engine import engine_for

logger = logging.getLogger(__name__)


@dataclass
class SpectrumComparison:
    """Verdict of compare_p_spectra; divergence is (μ, d_A, d_B) at the smallest differing μ."""
    p: int
    mu_max: Fraction
    equal: bool
    divergence: Optional[Tuple[Fraction, int, int]] = None

    def to_dict(self) -> dict:
        witness = None
        if self.divergence is not None:
            mu, d_a, d_b = self.divergence
            witness = {'mu': format_rational(mu), 'a': d_a, 'b': d_b}
        return {
            'p': self.p,
            'mu_max': format_rational(self.mu_max),
            'equal': self.equal,
            'divergence': witness,
        }


def _check_dimensions(group_a: BieberbachGroup, group_b: BieberbachGroup) -> None:
    if group_a.dimension != group_b.dimension:
        raise ValueError(
            f"Cannot compare groups of dimension {group_a.dimension} and {group_b.dimension}"
        )


def compare_p_spectra(group_a: BieberbachGroup, group_b: BieberbachGroup, p: int,
                      mu_max=None) -> SpectrumComparison:
    """
    Compare d_{p,μ} of two groups for every μ ≤ mu_max realized by either dual lattice.
    """
    _check_dimensions(group_a, group_b)
    limit = parse_rational(mu_max if mu_max is not None else SPECTRUM_CONFIG['default_mu_max'])
    engine_a, engine_b = engine_for(group_a), engine_for(group_b)
    norms = sorted(set(engine_a.realizable_norms(limit)) | set(engine_b.realizable_norms(limit)))
    for mu in norms:
        d_a = engine_a.multiplicity(p, mu)
        d_b = engine_b.multiplicity(p, mu)
        if d_a != d_b:
            logger.info("p=%d spectra diverge at mu=%s (%d vs %d)", p, mu, d_a, d_b)
            return SpectrumComparison(p=p, mu_max=limit, equal=False, divergence=(mu, d_a, d_b))
    return SpectrumComparison(p=p, mu_max=limit, equal=True)


def isospectral_degrees(group_a: BieberbachGroup, group_b: BieberbachGroup,
                        mu_max=None) -> List[int]:
    """All p for which the two p-spectra agree up to mu_max."""
    return [
        p for p in range(group_a.dimension + 1)
        if compare_p_spectra(group_a, group_b, p, mu_max).equal
    ]


def torus_spectrum_equal(group_a: BieberbachGroup, group_b: BieberbachGroup,
                         mu_max=None) -> bool:
    """
    Same |F| and same spectrum of the covering tori up to mu_max.

    Both are forced by 0-isospectrality.
    """
    _check_dimensions(group_a, group_b)
    if group_a.holonomy_order != group_b.holonomy_order:
        return False
    limit = parse_rational(mu_max if mu_max is not None else SPECTRUM_CONFIG['default_mu_max'])
    counts_a = shell_counts(group_a.gram.inverse(), limit)
    counts_b = shell_counts(group_b.gram.inverse(), limit)
    return dict(counts_a) == dict(counts_b)
