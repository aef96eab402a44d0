"""
Asymptotics - Small-s Behaviour of Z_p(s) for Diagonal-Type Groups

As s → 0, θ_{d,t}(1/4s) ~ 2^t e^{−t/16s}, so the (d, t) contribution is

    2^{−r} K_p^n(n−d) c_{d,t} 2^t (4πs)^{−d/2} e^{−t/16s}.

One term dominates another when its t is smaller, or t ties and its d
is larger.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import ZETA_CONFIG
from groups.bieberbach_group import BieberbachGroup
from spectra.krawtchouk import krawtchouk
from spectra.sunada import sunada_numbers
from .zeta_engine import diagonal_zeta


@dataclass
class AsymptoticTerm:
    d: int
    t: int
    coefficient: float

    def value(self, s: float) -> float:
        return self.coefficient * (4.0 * math.pi * s) ** (-self.d / 2.0) * math.exp(-self.t / (16.0 * s))

    def to_dict(self) -> dict:
        return {'d': self.d, 't': self.t, 'coefficient': self.coefficient}


def asymptotic_terms(group: BieberbachGroup, p: int) -> List[AsymptoticTerm]:
    """Nonzero leading terms, dominant first."""
    n = group.dimension
    terms = []
    for d, t, count in sunada_numbers(group).nonzero():
        k = krawtchouk(n, p, n - d)
        if k:
            coefficient = k * count * 2 ** t / group.holonomy_order
            terms.append(AsymptoticTerm(d=d, t=t, coefficient=coefficient))
    return sorted(terms, key=lambda term: (term.t, -term.d))


def fit_leading_exponent(group: BieberbachGroup, p: int, s1: Optional[float] = None,
                         s2: Optional[float] = None) -> float:
    """
    Fitted power of s in Z_p(s)·e^{t₀/16s} between s1 and s2.

    For the dominant term this approaches −d₀/2.
    """
    default_1, default_2 = ZETA_CONFIG['asymptotic_s_values']
    s1 = s1 if s1 is not None else default_1
    s2 = s2 if s2 is not None else default_2
    leading = asymptotic_terms(group, p)[0]

    def normalized(s: float) -> float:
        return diagonal_zeta(group, p, s).value * math.exp(leading.t / (16.0 * s))

    return math.log(normalized(s1) / normalized(s2)) / math.log(s1 / s2)
