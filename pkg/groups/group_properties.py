"""
Group Properties - Torsion, Orientability and Diagonal Type

Structural predicates evaluated on a closed BieberbachGroup.
"""

from dataclasses import dataclass
from typing import List, Optional

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.rational_matrix import is_integral_vector
from .affine_element import AffineElement
from .bieberbach_group import BieberbachGroup
from .fixed_space import fixed_space


@dataclass
class TorsionReport:
    """Outcome of torsion_free_check; offending coset set on failure."""
    passed: bool
    coset_index: Optional[int] = None
    coset: Optional[AffineElement] = None
    message: str = ''

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'coset_index': self.coset_index,
            'coset': self.coset.to_dict() if self.coset else None,
            'message': self.message,
        }


def torsion_free_check(group: BieberbachGroup) -> TorsionReport:
    """
    Check that no element B L_{b+λ} with B ≠ Id has a fixed point.

    Such a fixed point exists iff b₊ ∈ p_B(Λ), i.e. iff the coordinates
    of p_B(b) in the projected lattice basis are all integers.
    """
    for index, coset in group.non_identity_cosets():
        data = fixed_space(coset.point)
        coordinates = data.projected_coordinates(coset.translation)
        if is_integral_vector(coordinates):
            return TorsionReport(
                passed=False,
                coset_index=index,
                coset=coset,
                message=(
                    f"coset {index} has a fixed point (n_B = {data.n_B}, "
                    f"p_B(b) in p_B(Λ))"
                ),
            )
    return TorsionReport(passed=True)


def is_orientable(group: BieberbachGroup) -> bool:
    return all(coset.point.determinant() == 1 for coset in group.cosets)


def determinant_parity_holds(group: BieberbachGroup) -> bool:
    """det B = (−1)^{n−n_B} for every coset."""
    n = group.dimension
    return all(
        coset.point.determinant() == (-1) ** (n - fixed_space(coset.point).n_B)
        for coset in group.cosets
    )


def is_diagonal_type(group: BieberbachGroup) -> bool:
    """
    True iff gram is the identity and every point part is diagonal ±1.

    Trivial holonomy counts as diagonal whatever the Gram matrix; use
    diagonal_type_label to tell that case apart.
    """
    if group.is_torus():
        return True
    if not group.gram.is_identity():
        return False
    return all(coset.point.is_signed_diagonal() for coset in group.cosets)


def diagonal_type_label(group: BieberbachGroup) -> str:
    if group.is_torus() and not group.gram.is_identity():
        return 'not applicable'
    return 'yes' if is_diagonal_type(group) else 'no'


def fixed_dimensions(group: BieberbachGroup) -> List[int]:
    return [fixed_space(coset.point).n_B for coset in group.cosets]
