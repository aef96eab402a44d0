"""
Orbit Oracle - Multiplicities by Direct Invariant-Subspace Computation

Independent check of the trace-formula engine for diagonal-type groups.
Γ acts on span{f_v ⊗ e_I : v ∈ Λ*_μ, |I| = p} by pushforward,

    γ·(f_v ⊗ e_I) = e^{−2πi v·b} f_{Bv} ⊗ (∏_{i∈I} B_ii) e_I,

and d_{p,μ} is the rank of the average of these operators over F.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.exceptions import DomainViolation, NotDiagonalType
from core.lattice_enumerator import enumerate_shell
from core.rational_matrix import parse_rational
from groups.bieberbach_group import BieberbachGroup
from groups.group_properties import is_diagonal_type

logger = logging.getLogger(__name__)


def brute_force_multiplicity(group: BieberbachGroup, p: int, mu) -> int:
    """
    d_{p,μ} as the dimension of the Γ-invariant part of Λ*_μ ⊗ Λ^p.

    Raises:
        NotDiagonalType: for groups that are not of diagonal type.
    """
    if not is_diagonal_type(group) or not group.gram.is_identity():
        raise NotDiagonalType("The orbit oracle needs an orthonormal diagonal-type group")
    n = group.dimension
    if not 0 <= p <= n:
        raise DomainViolation(f"Form degree {p} outside 0..{n}")
    target = parse_rational(mu)

    shell = enumerate_shell(group.gram, target)
    if not shell:
        return 0
    subsets = list(combinations(range(n), p))
    index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
    for v in shell:
        for subset in subsets:
            index[(v, subset)] = len(index)

    size = len(index)
    average = np.zeros((size, size), dtype=complex)
    for coset in group.cosets:
        signs = [int(coset.matrix[i, i]) for i in range(n)]
        for (v, subset), column in index.items():
            phase = sum((Fraction(v[i]) * coset.translation[i] for i in range(n)), Fraction(0))
            image = tuple(signs[i] * v[i] for i in range(n))
            form_sign = int(np.prod([signs[i] for i in subset])) if subset else 1
            row = index[(image, subset)]
            average[row, column] += form_sign * np.exp(-2j * np.pi * float(phase))
    average /= group.holonomy_order

    rank = int(np.linalg.matrix_rank(average, tol=1e-9))
    logger.debug("orbit oracle: p=%d mu=%s dim=%d rank=%d", p, target, size, rank)
    return rank
