"""
Spectrum Engine - p-Form Laplace Multiplicities via the Trace Formula

d_{p,μ}(Γ) = |F|⁻¹ Σ_γ tr_p(B) e_{μ,γ}, eigenvalue 4π²μ. For each coset the
engine builds the series μ ↦ e_{μ,γ} over the B-fixed dual lattice:

- diagonal-type groups use the sign formula (e depends only on n_B, t);
- orthogonal fixed dual lattices with rational double cosines use a
  product of one-dimensional series;
- anything else enumerates the fixed dual ball and sums exactly.
"""

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import SPECTRUM_CONFIG
from core.exceptions import DomainViolation
from core.lattice_enumerator import enumerate_ball
from core.norm_series import product
from core.rational_matrix import RationalMatrix, format_rational, parse_rational
from core.smith_normal_form import integer_kernel_basis
from groups.bieberbach_group import BieberbachGroup
from .character_sums import CyclotomicAccumulator, double_cosine, phase_of
from .krawtchouk import trace_vector

logger = logging.getLogger(__name__)


@dataclass
class SpectrumTable:
    """μ ↦ d_{p,μ}; eigenvalue 4π²μ. μ = 0 is always present (Betti number)."""
    p: int
    entries: Dict[Fraction, int] = field(default_factory=dict)
    mu_max: Fraction = Fraction(0)

    def multiplicity(self, mu) -> int:
        return self.entries.get(parse_rational(mu), 0)

    def items(self) -> List[Tuple[Fraction, int]]:
        return sorted(self.entries.items())

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'mu_max': format_rational(self.mu_max),
            'entries': [
                {'mu': format_rational(mu), 'multiplicity': d} for mu, d in self.items()
            ],
        }


# =============================================================================
# ONE-DIMENSIONAL SERIES
# =============================================================================

@lru_cache(maxsize=256)
def _line_series(scale: Fraction, double_cosines: Tuple[Fraction, ...], limit: Fraction) -> Tuple:
    """Σ_k c_k x^{scale·k²}; c_0 = 1, c_k = double_cosines[k mod len]."""
    terms = {Fraction(0): Fraction(1)}
    k = 1
    while scale * k * k <= limit:
        terms[scale * k * k] = double_cosines[k % len(double_cosines)]
        k += 1
    return tuple(sorted(terms.items()))


@lru_cache(maxsize=512)
def sign_formula_series(n_B: int, t: int, limit: Fraction) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """
    μ ↦ Σ_{v ∈ Z^{n_B}, |v|² = μ} (−1)^{Σ_{i≤t} v_i}, for μ ≤ limit.

    This is e_{μ,γ} of a diagonal coset with n_B = d and t odd half-translations.
    """
    plain = dict(_line_series(Fraction(1), (Fraction(2),), limit))
    alternating = dict(_line_series(Fraction(1), (Fraction(2), Fraction(-2)), limit))
    series = product([alternating] * t + [plain] * (n_B - t), limit)
    return tuple(sorted((mu, Fraction(v)) for mu, v in series.items() if v))


# =============================================================================
# ENGINE
# =============================================================================

class SpectrumEngine:
    """
    Multiplicity engine bound to one group; caches per-coset character series.
    """

    def __init__(self, group: BieberbachGroup):
        self.group = group
        self.dual_gram = group.gram.inverse()
        self._series: Dict[int, Dict[Fraction, CyclotomicAccumulator]] = {}
        self._limit = Fraction(-1)
        self._lock = threading.Lock()
        self._diagonal = group.gram.is_identity() and all(
            c.point.is_signed_diagonal() for c in group.cosets
        )

    # ------------------------------------------------------------------
    # Character series
    # ------------------------------------------------------------------

    def _ensure(self, mu_max: Fraction) -> Dict[int, Dict[Fraction, CyclotomicAccumulator]]:
        """Per-coset series covering at least mu_max."""
        with self._lock:
            if mu_max > self._limit:
                self._series = {
                    index: self._coset_series(index, mu_max)
                    for index in range(self.group.holonomy_order)
                }
                self._limit = mu_max
            return self._series

    def _coset_series(self, index: int, limit: Fraction) -> Dict[Fraction, CyclotomicAccumulator]:
        coset = self.group.cosets[index]
        if self._diagonal:
            fixed = [i for i in range(self.group.dimension) if coset.matrix[i, i] == 1]
            t = sum(1 for i in fixed if coset.translation[i] == Fraction(1, 2))
            return self._wrap(sign_formula_series(len(fixed), t, limit))

        B_transpose = coset.matrix.transpose()
        difference = B_transpose - RationalMatrix.identity(self.group.dimension)
        basis = integer_kernel_basis(difference.to_int_rows())
        if not basis:
            return self._wrap(((Fraction(0), Fraction(1)),))
        W = RationalMatrix.from_columns(basis)
        gram_W = W.transpose() @ self.dual_gram @ W
        phases = [phase_of(w, coset.translation) for w in basis]

        if gram_W.is_diagonal() and all(
            phase.denominator in SPECTRUM_CONFIG['rational_moduli'] for phase in phases
        ):
            factors = []
            for j, phase in enumerate(phases):
                cosines = tuple(double_cosine(k * phase) for k in range(phase.denominator))
                factors.append(dict(_line_series(gram_W[j, j], cosines, limit)))
            series = product(factors, limit)
            return self._wrap(tuple(sorted(series.items())))

        logger.debug("coset %d: enumerating fixed dual ball up to %s", index, limit)
        accumulators: Dict[Fraction, CyclotomicAccumulator] = {}
        for k, norm in enumerate_ball(gram_W, limit):
            w = [sum(basis[j][i] * k[j] for j in range(len(basis))) for i in range(self.group.dimension)]
            accumulators.setdefault(norm, CyclotomicAccumulator()).add(phase_of(w, coset.translation))
        return accumulators

    @staticmethod
    def _wrap(items) -> Dict[Fraction, CyclotomicAccumulator]:
        wrapped = {}
        for mu, value in items:
            acc = CyclotomicAccumulator()
            acc.add_rational(Fraction(value))
            wrapped[mu] = acc
        return wrapped

    def realizable_norms(self, mu_max) -> List[Fraction]:
        """Norms of Λ* up to mu_max (keys of the identity coset series)."""
        limit = parse_rational(mu_max)
        series = self._ensure(limit)
        return sorted(mu for mu in series[0] if mu <= limit)

    def e_term(self, coset_index: int, mu) -> Fraction:
        """Exact e_{μ,γ} for the coset at coset_index."""
        target = parse_rational(mu)
        if target < 0:
            raise DomainViolation(f"μ must be nonnegative, got {target}")
        series = self._ensure(target)
        accumulator = series[coset_index].get(target)
        return accumulator.value() if accumulator is not None else Fraction(0)

    # ------------------------------------------------------------------
    # Multiplicities
    # ------------------------------------------------------------------

    def _check_degree(self, p: int) -> None:
        if not 0 <= p <= self.group.dimension:
            raise DomainViolation(f"Form degree {p} outside 0..{self.group.dimension}")

    def multiplicity(self, p: int, mu) -> int:
        self._check_degree(p)
        target = parse_rational(mu)
        if target < 0:
            raise DomainViolation(f"μ must be nonnegative, got {target}")
        series = self._ensure(target)
        total = CyclotomicAccumulator()
        for index, coset in enumerate(self.group.cosets):
            accumulator = series[index].get(target)
            trace = trace_vector(coset.point)[p]
            if accumulator is not None and trace:
                total.merge(accumulator, trace)
        value = total.value() / self.group.holonomy_order
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(
                f"Multiplicity d_({p},{target}) = {value} is not a nonnegative integer"
            )
        return int(value)

    def spectrum_table(self, p: int, mu_max) -> SpectrumTable:
        limit = parse_rational(mu_max)
        table = SpectrumTable(p=p, mu_max=limit)
        for mu in self.realizable_norms(limit):
            d = self.multiplicity(p, mu)
            if d or mu == 0:
                table.entries[mu] = d
        return table

    def betti_numbers(self) -> List[int]:
        n = self.group.dimension
        order = self.group.holonomy_order
        betti = []
        for p in range(n + 1):
            total = sum(trace_vector(c.point)[p] for c in self.group.cosets)
            if total % order:
                raise ArithmeticError(f"Betti number b_{p} is not integral")
            betti.append(total // order)
        if betti[0] != 1:
            raise ArithmeticError(f"b_0 = {betti[0]}, expected 1")
        if n > 0 and sum((-1) ** p * b for p, b in enumerate(betti)) != 0:
            raise ArithmeticError("Alternating sum of Betti numbers is not zero")
        return betti


@lru_cache(maxsize=128)
def engine_for(group: BieberbachGroup) -> SpectrumEngine:
    return SpectrumEngine(group)


# =============================================================================
# MODULE-LEVEL OPERATIONS
# =============================================================================

def e_term(group: BieberbachGroup, coset_index: int, mu) -> Fraction:
    return engine_for(group).e_term(coset_index, mu)


def multiplicity(group: BieberbachGroup, p: int, mu) -> int:
    return engine_for(group).multiplicity(p, mu)


def spectrum_table(group: BieberbachGroup, p: int, mu_max=None) -> SpectrumTable:
    if mu_max is None:
        mu_max = SPECTRUM_CONFIG['default_mu_max']
    return engine_for(group).spectrum_table(p, mu_max)


def betti_numbers(group: BieberbachGroup) -> List[int]:
    return engine_for(group).betti_numbers()


def shell_size_bound(group: BieberbachGroup, mu) -> int:
    """|Λ*_μ|, the torus-domination bound divided by C(n,p)."""
    return int(engine_for(group).e_term(0, mu))
