"""
Sunada Numbers - Diagonal-Type Isospectrality Certificates

For a diagonal-type group, c_{d,t} counts cosets B L_b with n_B = d and
exactly t fixed coordinates carrying a half translation. The p-spectrum
depends on the group only through K_p^n(n−d)·c_{d,t}/|F|, which gives an
exact, cutoff-free p-isospectrality test.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import SPECTRUM_CONFIG
from core.exceptions import NotDiagonalType
from groups.bieberbach_group import BieberbachGroup
from groups.group_properties import is_diagonal_type
from .krawtchouk import krawtchouk, trace_vector
from .spectrum_engine import engine_for


@dataclass
class SunadaTable:
    """Counts c_{d,t}, 0 ≤ t ≤ d ≤ n; absent keys are zero."""
    n: int
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def count(self, d: int, t: int) -> int:
        return self.counts.get((d, t), 0)

    @property
    def holonomy_order(self) -> int:
        return sum(self.counts.values())

    def nonzero(self) -> List[Tuple[int, int, int]]:
        return [(d, t, c) for (d, t), c in sorted(self.counts.items()) if c]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SunadaTable):
            return NotImplemented
        return self.n == other.n and self.nonzero() == other.nonzero()

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'counts': [{'d': d, 't': t, 'count': c} for d, t, c in self.nonzero()],
        }


@dataclass
class CriterionVerdict:
    """Outcome of the Sunada-number p-isospectrality test."""
    p: int
    isospectral: bool
    certificate: List[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {'p': self.p, 'isospectral': self.isospectral, 'certificate': self.certificate}


def _require_diagonal(*groups: BieberbachGroup) -> None:
    for group in groups:
        if not is_diagonal_type(group):
            raise NotDiagonalType(f"Group {group.name or '?'} is not of diagonal type")


def coset_signature(group: BieberbachGroup, index: int) -> Tuple[int, int]:
    """(n_B, t) of a coset of a diagonal-type group."""
    coset = group.cosets[index]
    fixed = [i for i in range(group.dimension) if coset.matrix[i, i] == 1]
    t = sum(1 for i in fixed if coset.translation[i] == Fraction(1, 2))
    return len(fixed), t


def sunada_numbers(group: BieberbachGroup) -> SunadaTable:
    """
    Sunada table of a diagonal-type group.

    Raises:
        NotDiagonalType: if the group is not of diagonal type.
    """
    _require_diagonal(group)
    table = SunadaTable(n=group.dimension)
    for index in range(group.holonomy_order):
        key = coset_signature(group, index)
        table.counts[key] = table.counts.get(key, 0) + 1
    return table


def sunada_isospectral(group_a: BieberbachGroup, group_b: BieberbachGroup) -> bool:
    return sunada_numbers(group_a) == sunada_numbers(group_b)


def diagonal_isospectrality_criterion(group_a: BieberbachGroup, group_b: BieberbachGroup,
                                      p: int) -> CriterionVerdict:
    """
    Exact p-isospectrality verdict for diagonal-type groups of equal dimension.

    The certificate lists every (d, t) where K_p^n(n−d)·c_{d,t}/|F| differs.
    """
    _require_diagonal(group_a, group_b)
    n = group_a.dimension
    if group_b.dimension != n:
        raise ValueError(f"Dimensions differ: {n} vs {group_b.dimension}")
    table_a, table_b = sunada_numbers(group_a), sunada_numbers(group_b)
    order_a, order_b = group_a.holonomy_order, group_b.holonomy_order

    certificate = []
    for d in range(n + 1):
        k = krawtchouk(n, p, n - d)
        for t in range(d + 1):
            c_a, c_b = table_a.count(d, t), table_b.count(d, t)
            if k * Fraction(c_a, order_a) != k * Fraction(c_b, order_b):
                certificate.append({'d': d, 't': t, 'krawtchouk': k, 'c_a': c_a, 'c_b': c_b})
    return CriterionVerdict(p=p, isospectral=not certificate, certificate=certificate)


def bijection_certificate(group_a: BieberbachGroup, group_b: BieberbachGroup, p: int,
                          mu_list: Optional[Sequence] = None) -> Optional[List[Tuple[int, int]]]:
    """
    Pair cosets γ ↔ γ′ with tr_p(B)e_{μ,γ} = tr_p(B′)e_{μ,γ′} for every tested μ.

    Args:
        mu_list: Probe norms; defaults to all dual norms up to the configured bound.

    Returns:
        Sorted list of (index in A, index in B), or None if no pairing exists.
    """
    _require_diagonal(group_a, group_b)
    if group_a.holonomy_order != group_b.holonomy_order:
        return None
    engine_a, engine_b = engine_for(group_a), engine_for(group_b)
    if mu_list is None:
        mu_list = engine_a.realizable_norms(SPECTRUM_CONFIG['bijection_mu_max'])

    def signatures(group, engine):
        result = []
        for index, coset in enumerate(group.cosets):
            trace = trace_vector(coset.point)[p]
            result.append((tuple(trace * engine.e_term(index, mu) for mu in mu_list), index))
        return sorted(result)

    left, right = signatures(group_a, engine_a), signatures(group_b, engine_b)
    if [s for s, _ in left] != [s for s, _ in right]:
        return None
    return sorted((i, j) for (_, i), (_, j) in zip(left, right))
