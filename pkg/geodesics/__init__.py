"""
Closed Geodesics - Lengths, Complex Lengths and Conjugacy-Class Counts
"""

from .coset_quotient import CosetQuotient, coset_quotient
from .length_engine import (
    length_sq, base_point, holonomy_invariant, weak_length_spectrum, injectivity_radius_sq,
)
from .conjugacy_classes import GeodesicClass, LengthSpectrumReport, conjugacy_classes
from .brute_force import brute_force_classes
from .comparison import LengthComparison, compare_length_spectra

__all__ = [
    'CosetQuotient', 'coset_quotient', 'length_sq', 'base_point', 'holonomy_invariant',
    'weak_length_spectrum', 'injectivity_radius_sq', 'GeodesicClass',
    'LengthSpectrumReport', 'conjugacy_classes', 'brute_force_classes',
    'LengthComparison', 'compare_length_spectra',
]
