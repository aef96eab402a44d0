"""
Bieberbach Groups - Presentations, Closure and Structural Predicates
"""

from .affine_element import AffineElement, PointIsometry
from .bieberbach_group import BieberbachGroup, close_group
from .fixed_space import FixedSpaceData, fixed_space
from .group_properties import (
    TorsionReport, torsion_free_check, is_orientable, is_diagonal_type,
)

__all__ = [
    'AffineElement', 'PointIsometry', 'BieberbachGroup', 'close_group',
    'FixedSpaceData', 'fixed_space', 'TorsionReport', 'torsion_free_check',
    'is_orientable', 'is_diagonal_type',
]
