"""
Zeta Engine - Both Sides of the Poisson Summation Identity

Spectral side:   Z_p(s) = Σ_μ d_{p,μ} e^{−4π²μs}.
Geometric side:  Z_p(s) = |F|⁻¹ Σ_γ tr_p(B) vol(Λ*^B)⁻¹ (4πs)^{−n_B/2}
                          Σ_{λ₊ ∈ p_B(Λ)} e^{−‖λ₊ + b₊‖²/4s}.

Exact inputs (multiplicities, norms, Gram determinants) are converted to
floating point only for the final Gaussian sums. Every truncation
carries a tail bound; the constants are derived in theta.py.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import SPECTRUM_CONFIG, ZETA_CONFIG
from core.exceptions import DomainViolation, NotDiagonalType, TailNotControlled
from core.lattice_enumerator import enumerate_ball
from core.rational_matrix import RationalMatrix, parse_rational
from core.smith_normal_form import integer_kernel_basis
from geodesics.length_engine import quotients_for
from groups.bieberbach_group import BieberbachGroup
from groups.group_properties import is_diagonal_type
from spectra.krawtchouk import krawtchouk, trace_vector
from spectra.spectrum_engine import engine_for
from spectra.sunada import sunada_numbers
from .theta import gaussian_tail, line_sum, line_sum_to_epsilon, product_bounds, theta

logger = logging.getLogger(__name__)

FOUR_PI_SQUARED = 4.0 * math.pi ** 2


@dataclass
class SideValue:
    """One side of the identity: truncated value, tail bound and truncation parameter."""
    value: float
    tail: float
    truncation: Fraction


@dataclass
class ZetaEvaluation:
    """Both sides of the Poisson identity at one (p, s)."""
    p: int
    s: float
    spectral: SideValue
    geometric: SideValue
    tolerance: float = ZETA_CONFIG['base_tolerance']

    @property
    def difference(self) -> float:
        return abs(self.spectral.value - self.geometric.value)

    @property
    def allowed(self) -> float:
        return self.tolerance + self.spectral.tail + self.geometric.tail

    @property
    def passed(self) -> bool:
        return self.difference <= self.allowed

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            's': self.s,
            'spectral': self.spectral.value,
            'spectral_tail': self.spectral.tail,
            'mu_max': str(self.spectral.truncation),
            'geometric': self.geometric.value,
            'geometric_tail': self.geometric.tail,
            'ball_max': str(self.geometric.truncation),
            'difference': self.difference,
            'passed': self.passed,
        }


@dataclass
class PoissonReport:
    name: str
    evaluations: List[ZetaEvaluation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.evaluations)

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'evaluations': [e.to_dict() for e in self.evaluations],
        }


def _check_arguments(group: BieberbachGroup, p: int, s: float) -> None:
    if not 0 <= p <= group.dimension:
        raise DomainViolation(f"Form degree {p} outside 0..{group.dimension}")
    if s <= 0:
        raise DomainViolation(f"s must be positive, got {s}")


def _smallest_eigenvalue(gram: RationalMatrix) -> float:
    return float(np.linalg.eigvalsh(np.array(gram.to_float_rows())).min())


# =============================================================================
# SPECTRAL SIDE
# =============================================================================

def _torus_tail(group: BieberbachGroup, x: float, mu_max: Fraction) -> float:
    """Bound for Σ_{v ∈ Λ*, ‖v‖² > mu_max} e^{−x‖v‖²}."""
    dual_gram = group.gram.inverse()
    n = group.dimension
    if dual_gram.is_diagonal():
        upper = 1.0
        for i in range(n):
            partial, tail = line_sum_to_epsilon(x * float(dual_gram[i, i]))
            upper *= partial + tail
        engine = engine_for(group)
        inside = sum(
            float(engine.e_term(0, mu)) * math.exp(-x * float(mu))
            for mu in engine.realizable_norms(mu_max)
        )
        return max(0.0, upper - inside) + upper * 1e-15
    return gaussian_tail(x, float(mu_max), _smallest_eigenvalue(dual_gram), n)


def zeta_spectral(group: BieberbachGroup, p: int, s: float, mu_max=None) -> SideValue:
    """
    Σ_{μ ≤ mu_max} d_{p,μ} e^{−4π²μs}.

    The tail uses d_{p,μ} ≤ C(n,p)·|Λ*_μ|.
    """
    _check_arguments(group, p, s)
    limit = parse_rational(mu_max if mu_max is not None else SPECTRUM_CONFIG['default_mu_max'])
    engine = engine_for(group)
    x = FOUR_PI_SQUARED * s
    value = 0.0
    for mu in engine.realizable_norms(limit):
        d = engine.multiplicity(p, mu)
        if d:
            value += d * math.exp(-x * float(mu))
    tail = comb(group.dimension, p) * _torus_tail(group, x, limit)
    return SideValue(value=value, tail=tail, truncation=limit)


# =============================================================================
# GEOMETRIC SIDE
# =============================================================================

@lru_cache(maxsize=1024)
def fixed_dual_volume(group: BieberbachGroup, coset_index: int) -> float:
    """vol(Λ*^B) = sqrt(det(Wᵀ Q⁻¹ W)) for a basis W of B-fixed dual coordinates."""
    coset = group.cosets[coset_index]
    difference = coset.matrix.transpose() - RationalMatrix.identity(group.dimension)
    basis = integer_kernel_basis(difference.to_int_rows())
    if not basis:
        return 1.0
    W = RationalMatrix.from_columns(basis)
    determinant = (W.transpose() @ group.gram.inverse() @ W).determinant()
    return math.sqrt(float(determinant))


def _coset_gaussian_sum(free_gram: RationalMatrix, offset, y: float,
                        ball_max: Fraction) -> Tuple[float, float]:
    """Σ_z e^{−y‖c+z‖²} over the projected lattice, with tail bound."""
    dimension = free_gram.nrows
    if dimension == 0:
        return 1.0, 0.0
    if free_gram.is_diagonal():
        factors = []
        for i in range(dimension):
            g = float(free_gram[i, i])
            factors.append(line_sum(y * g, float(offset[i]), math.sqrt(float(ball_max) / g)))
        return product_bounds(factors)
    points = enumerate_ball(free_gram, ball_max, shift=offset)
    norms = np.array([float(norm) for _, norm in points])
    value = float(np.exp(-y * norms).sum())
    tail = gaussian_tail(y, float(ball_max), _smallest_eigenvalue(free_gram), dimension)
    return value, tail


def zeta_geometric(group: BieberbachGroup, p: int, s: float, ball_max=None) -> SideValue:
    """
    Geometric side with λ₊ + b₊ restricted to squared norm ≤ ball_max.

    Orthogonal projected lattices are summed coordinatewise over the
    enclosing box instead of the ball.
    """
    _check_arguments(group, p, s)
    limit = parse_rational(ball_max if ball_max is not None else SPECTRUM_CONFIG['default_mu_max'])
    y = 1.0 / (4.0 * s)
    order = group.holonomy_order
    value = 0.0
    tail = 0.0
    for quotient in quotients_for(group):
        trace = trace_vector(quotient.element.point)[p]
        if not trace:
            continue
        weight = trace / fixed_dual_volume(group, quotient.coset_index) \
            * (4.0 * math.pi * s) ** (-quotient.free_rank / 2.0) / order
        partial, error = _coset_gaussian_sum(quotient.free_gram, quotient.offset, y, limit)
        value += weight * partial
        tail += abs(weight) * error
    return SideValue(value=value, tail=tail, truncation=limit)


# =============================================================================
# POISSON CHECK
# =============================================================================

def _refine(evaluate, start: Fraction, budget: float, label: str) -> SideValue:
    truncation = start
    for _ in range(ZETA_CONFIG['max_refinements']):
        side = evaluate(truncation)
        if side.tail < budget:
            return side
        truncation *= 2
    raise TailNotControlled(f"{label} tail still ≥ {budget:g} at truncation {truncation}")


def evaluate_identity(group: BieberbachGroup, p: int, s: float,
                      tolerance: Optional[float] = None) -> ZetaEvaluation:
    """Both sides at one s, truncations doubled until each tail is below tolerance/4."""
    tolerance = tolerance if tolerance is not None else ZETA_CONFIG['base_tolerance']
    budget = tolerance / 4
    spectral = _refine(lambda m: zeta_spectral(group, p, s, m), Fraction(2), budget, 'spectral')
    geometric = _refine(lambda r: zeta_geometric(group, p, s, r), Fraction(2), budget, 'geometric')
    evaluation = ZetaEvaluation(p=p, s=s, spectral=spectral, geometric=geometric, tolerance=tolerance)
    logger.debug(
        "poisson %s p=%d s=%g: spectral=%.12g geometric=%.12g",
        group.name, p, s, spectral.value, geometric.value,
    )
    return evaluation


def poisson_check(group: BieberbachGroup, p: int,
                  s_list: Optional[Sequence[float]] = None,
                  tolerance: Optional[float] = None) -> PoissonReport:
    """
    Evaluate both sides of the identity for every s.

    Raises:
        TailNotControlled: when a truncation cannot be made fine enough.
    """
    s_values = s_list if s_list is not None else ZETA_CONFIG['default_s_values']
    report = PoissonReport(name=group.name)
    for s in s_values:
        report.evaluations.append(evaluate_identity(group, p, float(s), tolerance))
    return report


# =============================================================================
# DIAGONAL GROUPS
# =============================================================================

def _theta_to_tolerance(d: int, t: int, z: float, budget: float):
    shells = Fraction(4)
    for _ in range(ZETA_CONFIG['max_refinements']):
        result = theta(d, t, z, shells)
        # the tail cannot drop below the rounding floor of the bound
        if result.tail < budget or result.tail <= 1e-13 * max(1.0, result.value):
            return result
        shells *= 2
    raise TailNotControlled(f"theta_{d},{t}({z:g}) tail still ≥ {budget:g}")


def diagonal_zeta(group: BieberbachGroup, p: int, s: float,
                  tolerance: Optional[float] = None) -> SideValue:
    """
    Z_p(s) = 2^{−r} Σ_d K_p^n(n−d) (4πs)^{−d/2} Σ_t c_{d,t} θ_{d,t}(1/4s).

    Raises:
        NotDiagonalType: unless the group is of diagonal type with Gram = Id.
    """
    if not is_diagonal_type(group) or not group.gram.is_identity():
        raise NotDiagonalType(f"Group {group.name or '?'} has no orthonormal diagonal form")
    _check_arguments(group, p, s)
    tolerance = tolerance if tolerance is not None else ZETA_CONFIG['base_tolerance']
    n = group.dimension
    table = sunada_numbers(group)
    z = 1.0 / (4.0 * s)
    budget = tolerance / (4 * max(1, len(table.nonzero())))

    value = 0.0
    tail = 0.0
    for d, t, count in table.nonzero():
        k = krawtchouk(n, p, n - d)
        if not k:
            continue
        weight = k * count * (4.0 * math.pi * s) ** (-d / 2.0) / group.holonomy_order
        result = _theta_to_tolerance(d, t, z, budget / max(1.0, abs(weight)))
        value += weight * result.value
        tail += abs(weight) * result.tail
    return SideValue(value=value, tail=tail, truncation=Fraction(0))
