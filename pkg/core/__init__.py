"""
Exact Arithmetic Core - Rational Linear Algebra and Lattice Enumeration
"""

from .rational_matrix import RationalMatrix, parse_rational, format_rational
from .smith_normal_form import SmithDecomposition, smith_normal_form, integer_kernel_basis
from .lattice_enumerator import enumerate_ball, enumerate_shell, shell_counts
from .polynomials import char_poly, exterior_traces, format_polynomial

__all__ = [
    'RationalMatrix', 'parse_rational', 'format_rational',
    'SmithDecomposition', 'smith_normal_form', 'integer_kernel_basis',
    'enumerate_ball', 'enumerate_shell', 'shell_counts',
    'char_poly', 'exterior_traces', 'format_polynomial',
]
