"""
Isospectral Pairs - Expected Verdicts for the Classical Comparison Table

Each row names two corpus groups and the verdict expected in every
comparison column. `None` marks a column the row makes no claim about.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.exceptions import DomainViolation


@dataclass(frozen=True)
class IsospectralPair:
    key: str
    gamma: str
    gammap: str
    description: str
    some_p_isospectral: bool
    sunada: bool
    isomorphic: Optional[bool]
    counted: bool
    weak: bool
    complex_counted: Optional[bool] = None
    complex_weak: Optional[bool] = None
    spectrum_mu: Fraction = Fraction(6)
    length_cutoff: Fraction = Fraction(4)

    def expected(self) -> Dict[str, Optional[bool]]:
        return {
            'some_p': self.some_p_isospectral,
            'sunada': self.sunada,
            'counted': self.counted,
            'weak': self.weak,
            'complex-counted': self.complex_counted,
            'complex-weak': self.complex_weak,
        }

    def to_dict(self) -> dict:
        return {
            'key': self.key,
            'gamma': self.gamma,
            'gammap': self.gammap,
            'description': self.description,
            'isomorphic': self.isomorphic,
            'spectrum_mu': str(self.spectrum_mu),
            'length_cutoff': str(self.length_cutoff),
            'expected': self.expected(),
        }


ISOSPECTRAL_PAIRS: List[IsospectralPair] = [
    IsospectralPair(
        key='ex23i', gamma='ex23i_gamma', gammap='ex23i_gammap',
        description='p-isospectral for p = 2 only, not 0-isospectral',
        some_p_isospectral=True, sunada=False, isomorphic=False,
        counted=False, weak=False,
    ),
    IsospectralPair(
        key='ex34', gamma='ex34_gamma', gammap='ex34_gammap',
        description='Sunada isospectral, same lengths, different multiplicities',
        some_p_isospectral=True, sunada=True, isomorphic=False,
        counted=False, weak=True, complex_counted=False, complex_weak=True,
    ),
    IsospectralPair(
        key='ex36', gamma='ex36_gamma', gammap='ex36_gammap',
        description='0-isospectral, same lengths, different complex lengths',
        some_p_isospectral=True, sunada=False, isomorphic=False,
        counted=False, weak=True, complex_counted=False, complex_weak=False,
    ),
    IsospectralPair(
        key='ex33', gamma='ex33_gamma', gammap='ex33_gammap',
        description='Sunada isospectral and [L_c]-isospectral, nonisomorphic',
        some_p_isospectral=True, sunada=True, isomorphic=False,
        counted=True, weak=True, complex_counted=True, complex_weak=True,
    ),
    IsospectralPair(
        key='ex37', gamma='ex37_gamma', gammap='ex37_gammap',
        description='Sunada isospectral and [L]-isospectral, isomorphic',
        some_p_isospectral=True, sunada=True, isomorphic=True,
        counted=True, weak=True,
    ),
    IsospectralPair(
        key='ex35', gamma='ex35_gamma', gammap='ex35_gammap',
        description='[L_c]-isospectral, not p-isospectral for any p',
        some_p_isospectral=False, sunada=False, isomorphic=False,
        counted=True, weak=True, complex_counted=True, complex_weak=True,
        spectrum_mu=Fraction(1),
    ),
    IsospectralPair(
        key='gamma_7', gamma='gamma_7_5', gammap='gamma_7_6',
        description='same lengths, nothing else in common',
        some_p_isospectral=False, sunada=False, isomorphic=False,
        counted=False, weak=True,
    ),
]


def isospectral_pair(key: str) -> IsospectralPair:
    for pair in ISOSPECTRAL_PAIRS:
        if pair.key == key:
            return pair
    raise DomainViolation(f"No table row '{key}'")


def pair_for(gamma: str, gammap: str) -> Optional[IsospectralPair]:
    """Table row for two corpus names, in either order."""
    for pair in ISOSPECTRAL_PAIRS:
        if {pair.gamma, pair.gammap} == {gamma, gammap}:
            return pair
    return None
