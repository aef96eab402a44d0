"""
Theta Sums - Truncated Gaussian Lattice Sums with Certified Tails

One-dimensional shifted sums Σ_z e^{−y(c+z)²} are the building block:
the terms left out all satisfy |c+z| ≥ R and are spaced by one on each
side, so (R+k)² ≥ R² + 2Rk bounds them by

    2 e^{−yR²} / (1 − e^{−2yR}).

Products of these give the theta series θ_{d,t} of diagonal-type groups
and upper bounds for full lattice sums.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import ZETA_CONFIG
from core.exceptions import DomainViolation
from core.norm_series import product
from core.rational_matrix import parse_rational


def line_tail(y: float, radius: float) -> float:
    """Bound for Σ e^{−y(c+z)²} over |c+z| ≥ radius."""
    if radius <= 0:
        return math.inf
    denominator = -math.expm1(-2.0 * y * radius)
    if denominator <= 0:
        return math.inf
    return 2.0 * math.exp(-y * radius * radius) / denominator


def line_sum(y: float, shift: float, radius: float) -> Tuple[float, float]:
    """(Σ_{|c+z| < radius} e^{−y(c+z)²}, tail bound) for c = shift."""
    lo = math.floor(-shift - radius) - 1
    hi = math.ceil(-shift + radius) + 1
    values = shift + np.arange(lo, hi + 1, dtype=float)
    kept = values[np.abs(values) < radius]
    return float(np.exp(-y * kept * kept).sum()), line_tail(y, radius)


def line_sum_to_epsilon(y: float, shift: float = 0.0,
                        epsilon: float = None) -> Tuple[float, float]:
    """Shifted line sum with the radius grown until the tail is below epsilon."""
    epsilon = epsilon if epsilon is not None else ZETA_CONFIG['theta_tail_epsilon']
    radius = 1.0
    while True:
        partial, tail = line_sum(y, shift, radius)
        if tail < epsilon:
            return partial, tail
        radius += 1.0


def gaussian_tail(x: float, bound: float, smallest_eigenvalue: float, dimension: int) -> float:
    """
    Bound for Σ e^{−x‖u‖²} over points of a (shifted) lattice with ‖u‖² > bound.

    e^{−x‖u‖²} ≤ e^{−x·bound/2} e^{−x‖u‖²/2}, the Gram form dominates
    λ_min‖·‖², and a shifted one-dimensional theta sum never exceeds the
    unshifted one, which is at most 1 + 2/(e^c − 1).
    """
    if dimension == 0:
        return 0.0
    c = x * smallest_eigenvalue / 2.0
    per_axis = 1.0 + 2.0 / math.expm1(c)
    return math.exp(-x * bound / 2.0) * per_axis ** dimension


@dataclass
class ThetaSum:
    """θ_{d,t}(z) truncated at exponent ≤ shells, with a tail bound."""
    d: int
    t: int
    z: float
    shells: Fraction
    value: float
    tail: float

    def to_dict(self) -> dict:
        return {
            'd': self.d, 't': self.t, 'z': self.z, 'shells': str(self.shells),
            'value': self.value, 'tail': self.tail,
        }


def _quarter_series(half: bool, limit: int) -> Dict[Fraction, int]:
    """Counts of 4x² over x ∈ ½+Z (half) or x ∈ Z, keys ≤ limit."""
    series: Dict[Fraction, int] = {}
    m = 0
    while True:
        key = (2 * m + 1) ** 2 if half else 4 * m * m
        if key > limit:
            break
        series[Fraction(key)] = series.get(Fraction(key), 0) + (2 if half or m else 1)
        m += 1
    return series


def theta_counts(d: int, t: int, shells) -> Dict[Fraction, int]:
    """exponent ↦ number of tuples, for exponents Σ_{j≤t}(½+m_j)² + Σ_{j>t} m_j² ≤ shells."""
    limit = parse_rational(shells)
    quarter_limit = int(4 * limit)
    factors = [_quarter_series(True, quarter_limit)] * t + \
        [_quarter_series(False, quarter_limit)] * (d - t)
    counts = product(factors, Fraction(quarter_limit))
    return {key / 4: count for key, count in counts.items() if key / 4 <= limit}


def theta(d: int, t: int, z: float, shells) -> ThetaSum:
    """
    θ_{d,t}(z) = Σ_{m∈Z^d} e^{−z(Σ_{j≤t}(½+m_j)² + Σ_{j>t} m_j²)}, truncated.

    Raises:
        DomainViolation: unless 0 ≤ t ≤ d, z > 0 and shells > 0.
    """
    limit = parse_rational(shells)
    if not 0 <= t <= d or z <= 0 or limit <= 0:
        raise DomainViolation(f"theta arguments out of range: d={d}, t={t}, z={z}, shells={shells}")
    counts = theta_counts(d, t, limit)
    exponents = np.array([float(e) for e in counts])
    weights = np.array([float(c) for c in counts.values()])
    value = float((weights * np.exp(-z * exponents)).sum()) if counts else 0.0

    upper = 1.0
    for half in [True] * t + [False] * (d - t):
        partial, tail = line_sum_to_epsilon(z, 0.5 if half else 0.0)
        upper *= partial + tail
    tail = max(0.0, upper - value) + upper * 1e-15
    return ThetaSum(d=d, t=t, z=z, shells=limit, value=value, tail=tail)


def product_bounds(sums: Sequence[Tuple[float, float]]) -> Tuple[float, float]:
    """(∏ S_i, ∏(S_i + T_i) − ∏ S_i) for factors with partial sums S_i and tails T_i."""
    partial = 1.0
    upper = 1.0
    for s, t in sums:
        partial *= s
        upper *= s + t
    return partial, upper - partial
