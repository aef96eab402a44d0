"""
Lattice Enumerator - Exact Shell and Ball Enumeration

Enumerates integer vectors of a positive definite rational quadratic form
by recursive coordinate bounding on its rational LDLᵀ decomposition.
Every accepted vector is checked with exact arithmetic; floating point is
never used to decide membership.
"""

import logging
from collections import OrderedDict
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import DomainViolation, NonPositiveDefiniteGram
from .rational_matrix import RationalMatrix, ldl_decomposition, parse_rational

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _check_gram(gram: RationalMatrix) -> Tuple[List[List[Fraction]], List[Fraction]]:
    if not gram.is_square():
        raise NonPositiveDefiniteGram(f"Gram matrix must be square, got {gram.shape}")
    return ldl_decomposition(gram)


def enumerate_ball(gram: RationalMatrix, mu_max,
                   shift: Optional[Sequence[Fraction]] = None) -> List[Tuple[IntVector, Fraction]]:
    """
    All integer vectors z with (z + shift)ᵀ·gram·(z + shift) ≤ mu_max.

    Args:
        gram: Symmetric positive definite rational matrix.
        mu_max: Rational bound (int, Fraction or "p/q").
        shift: Optional rational offset; defaults to the origin.

    Returns:
        List of (vector, squared norm) sorted by norm, then lexicographically.
    """
    bound = parse_rational(mu_max)
    if bound < 0:
        raise DomainViolation(f"Ball bound must be nonnegative, got {bound}")
    mu, d = _check_gram(gram)
    n = gram.nrows
    offset = tuple(Fraction(c) for c in shift) if shift is not None else (Fraction(0),) * n
    if len(offset) != n:
        raise ValueError(f"Shift has length {len(offset)}, expected {n}")

    results: List[Tuple[IntVector, Fraction]] = []
    x = [0] * n
    y = [Fraction(0)] * n

    def descend(i: int, remaining: Fraction, accumulated: Fraction) -> None:
        if i < 0:
            results.append((tuple(x), accumulated))
            return
        center = offset[i] + sum((mu[i][j] * y[j] for j in range(i + 1, n)), Fraction(0))
        radius_sq = remaining / d[i]
        outer = isqrt(_floor(radius_sq)) + 1
        for xi in range(_floor(-center) - outer, _ceil(-center) + outer + 1):
            term = d[i] * (xi + center) ** 2
            if term > remaining:
                continue
            x[i] = xi
            y[i] = xi + offset[i]
            descend(i - 1, remaining - term, accumulated + term)

    if n == 0:
        return [((), Fraction(0))]
    descend(n - 1, bound, Fraction(0))
    results.sort(key=lambda item: (item[1], item[0]))
    logger.debug("enumerate_ball: n=%d bound=%s -> %d vectors", n, bound, len(results))
    return results


def enumerate_shell(gram: RationalMatrix, mu) -> List[IntVector]:
    """
    Integer vectors v with vᵀ·gram·v = mu, in lexicographic order.
    """
    target = parse_rational(mu)
    return sorted(v for v, norm in enumerate_ball(gram, target) if norm == target)


def shell_counts(gram: RationalMatrix, mu_max) -> Dict[Fraction, int]:
    """Number of lattice vectors per exact squared norm up to mu_max."""
    counts: Dict[Fraction, int] = OrderedDict()
    for _, norm in enumerate_ball(gram, mu_max):
        counts[norm] = counts.get(norm, 0) + 1
    return counts
