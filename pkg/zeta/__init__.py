"""
Zeta - Heat-Trace Evaluation on Both Sides of Poisson Summation
"""

from .theta import ThetaSum, theta
from .zeta_engine import (
    SideValue, ZetaEvaluation, PoissonReport,
    zeta_spectral, zeta_geometric, poisson_check, diagonal_zeta,
)
from .asymptotics import AsymptoticTerm, asymptotic_terms, fit_leading_exponent

__all__ = [
    'ThetaSum', 'theta', 'SideValue', 'ZetaEvaluation', 'PoissonReport',
    'zeta_spectral', 'zeta_geometric', 'poisson_check', 'diagonal_zeta',
    'AsymptoticTerm', 'asymptotic_terms', 'fit_leading_exponent',
]
