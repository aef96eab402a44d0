"""
Length Engine - Lengths, Axes and Holonomy of Closed Geodesics

The closed geodesic of γ = B L_b has squared length ‖b₊‖² with
b₊ = p_B(b), lies on the line o_γ + R·b₊ and has holonomy B restricted
to the orthogonal complement of b₊, recorded by char_poly(B)/(t−1).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import GEODESIC_CONFIG
from core.exceptions import DomainViolation, ZeroLength
from core.polynomials import Polynomial, char_poly, divide_by_t_minus_one
from core.rational_matrix import (
    RationalMatrix, RationalVector, add_vectors, parse_rational, quadratic_form,
    sub_vectors, zero_vector,
)
from groups.affine_element import AffineElement
from groups.bieberbach_group import BieberbachGroup
from groups.fixed_space import fixed_space
from .coset_quotient import CosetQuotient, coset_quotient

logger = logging.getLogger(__name__)


def length_sq(element: AffineElement, gram: RationalMatrix) -> Fraction:
    """‖p_B(b)‖² under gram."""
    plus = fixed_space(element.point).project(element.translation)
    return quadratic_form(gram, plus)


def translation_part(element: AffineElement) -> Tuple[RationalVector, RationalVector]:
    """(b₊, b′) with b₊ = p_B(b) and b′ = b − b₊."""
    plus = fixed_space(element.point).project(element.translation)
    return plus, sub_vectors(element.translation, plus)


def base_point(element: AffineElement) -> RationalVector:
    """
    The point o_γ ⊥ ker(B−Id) with (B−Id)o_γ = −B b′.

    γ maps o_γ + t·b₊ to o_γ + (t+1)·b₊; this is asserted on the result.
    """
    n = element.dimension
    data = fixed_space(element.point)
    plus, prime = translation_part(element)
    if element.point.is_identity():
        if any(prime):
            raise DomainViolation("Translation has a component off the fixed space")
        return zero_vector(n)

    B = element.matrix
    difference = B - RationalMatrix.identity(n)
    system = RationalMatrix(list(difference.rows) + list(data.projector.rows))
    rhs = tuple(-x for x in B @ prime) + zero_vector(n)
    origin = system.solve(rhs)

    if element.apply(origin) != add_vectors(origin, plus):
        raise ArithmeticError("Base point does not lie on the invariant axis")
    return origin


def holonomy_invariant(element: AffineElement) -> Polynomial:
    """
    char_poly(B)/(t−1), the class of the holonomy B^⊥ in O(n−1).

    Raises:
        ZeroLength: if γ has no positive translation length.
    """
    plus, _ = translation_part(element)
    if not any(plus):
        raise ZeroLength("Holonomy is undefined for an element of length zero")
    return divide_by_t_minus_one(char_poly(element.matrix))


@lru_cache(maxsize=128)
def quotients_for(group: BieberbachGroup) -> Tuple[CosetQuotient, ...]:
    return tuple(
        coset_quotient(coset, group.gram, index) for index, coset in enumerate(group.cosets)
    )


def weak_length_spectrum(group: BieberbachGroup, cutoff_sq) -> List[Fraction]:
    """Sorted distinct squared lengths ≤ cutoff_sq, 0 included."""
    cutoff = parse_rational(cutoff_sq)
    if cutoff < 0:
        raise DomainViolation(f"Cutoff must be nonnegative, got {cutoff}")
    lengths = set()
    for quotient in quotients_for(group):
        if quotient.free_rank == 0:
            continue
        lengths.update(norm for _, norm in quotient.labels_within(cutoff))
    return sorted(lengths)


def shortest_positive_length_sq(group: BieberbachGroup,
                                start: Optional[Fraction] = None) -> Fraction:
    cutoff = parse_rational(start if start is not None else GEODESIC_CONFIG['injectivity_start_cutoff'])
    for _ in range(GEODESIC_CONFIG['injectivity_max_doublings']):
        positive = [length for length in weak_length_spectrum(group, cutoff) if length > 0]
        if positive:
            return positive[0]
        cutoff *= 2
    raise ArithmeticError(f"No closed geodesic found below squared length {cutoff}")


def injectivity_radius_sq(group: BieberbachGroup) -> Fraction:
    """Squared injectivity radius: (shortest squared length)/4."""
    return shortest_positive_length_sq(group) / 4
