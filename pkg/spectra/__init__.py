"""
Spectra - Krawtchouk Traces, p-Form Multiplicities and Sunada Numbers
"""

from .krawtchouk import krawtchouk, integral_roots, trace_p, KrawtchoukTable
from .spectrum_engine import (
    SpectrumEngine, SpectrumTable, e_term, multiplicity, spectrum_table, betti_numbers,
)
from .sunada import (
    SunadaTable, sunada_numbers, sunada_isospectral,
    diagonal_isospectrality_criterion, bijection_certificate,
)
from .comparison import SpectrumComparison, compare_p_spectra, torus_spectrum_equal
from .orbit_oracle import brute_force_multiplicity

__all__ = [
    'krawtchouk', 'integral_roots', 'trace_p', 'KrawtchoukTable',
    'SpectrumEngine', 'SpectrumTable', 'e_term', 'multiplicity', 'spectrum_table',
    'betti_numbers', 'SunadaTable', 'sunada_numbers', 'sunada_isospectral',
    'diagonal_isospectrality_criterion', 'bijection_certificate',
    'SpectrumComparison', 'compare_p_spectra', 'torus_spectrum_equal',
    'brute_force_multiplicity',
]
