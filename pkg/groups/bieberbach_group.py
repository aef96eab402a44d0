"""
Bieberbach Group - Holonomy Coset Closure

A group is stored as its Gram matrix plus one canonical representative
B L_b (b ∈ [0,1)^n) per holonomy element, identity first. close_group
builds that list from generators and checks the cocycle condition.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import EXACT_CONFIG
from core.exceptions import (
    ClosureBoundExceeded, CocycleInconsistent, NonPositiveDefiniteGram,
)
from core.rational_matrix import RationalMatrix
from .affine_element import AffineElement, PointIsometry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BieberbachGroup:
    """Closed group presentation: Gram matrix and holonomy coset representatives."""
    dimension: int
    gram: RationalMatrix
    cosets: Tuple[AffineElement, ...]
    generators: Tuple[AffineElement, ...] = field(default=())
    name: str = ''

    @property
    def holonomy_order(self) -> int:
        return len(self.cosets)

    @property
    def point_parts(self) -> Tuple[PointIsometry, ...]:
        return tuple(c.point for c in self.cosets)

    def is_torus(self) -> bool:
        return self.holonomy_order == 1

    def coset_index(self, point: PointIsometry) -> int:
        for index, coset in enumerate(self.cosets):
            if coset.point == point:
                return index
        raise KeyError(f"Point part not in holonomy of {self.name or 'group'}")

    def coset_for(self, point: PointIsometry) -> AffineElement:
        return self.cosets[self.coset_index(point)]

    def non_identity_cosets(self) -> List[Tuple[int, AffineElement]]:
        return [(i, c) for i, c in enumerate(self.cosets) if not c.point.is_identity()]

    def holonomy_generators(self) -> Tuple[AffineElement, ...]:
        """Generator representatives, or all non-identity cosets if none were given."""
        chosen = [g.canonical() for g in self.generators if not g.point.is_identity()]
        if chosen:
            return tuple(chosen)
        return tuple(c for _, c in self.non_identity_cosets())

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'dimension': self.dimension,
            'holonomy_order': self.holonomy_order,
            'gram': [[str(e) for e in row] for row in self.gram.rows],
            'cosets': [c.to_dict() for c in self.cosets],
        }


def validate_gram(gram: RationalMatrix, dimension: int) -> None:
    if gram.shape != (dimension, dimension):
        raise NonPositiveDefiniteGram(
            f"Gram matrix has shape {gram.shape}, expected {(dimension, dimension)}"
        )
    if not gram.is_positive_definite():
        raise NonPositiveDefiniteGram("Gram matrix is not symmetric positive definite")


def close_group(generators: Sequence[AffineElement], gram: RationalMatrix,
                closure_bound: Optional[int] = None,
                name: str = '') -> BieberbachGroup:
    """
    Close a set of generators modulo Λ = Z^n.

    Args:
        generators: Elements B L_b; point parts must preserve gram.
        gram: Symmetric positive definite Gram matrix of Λ.
        closure_bound: Maximum |F| (defaults to EXACT_CONFIG).
        name: Optional label carried into reports.

    Returns:
        BieberbachGroup with canonical cosets, identity first.

    Raises:
        NonOrthogonalGenerator, ClosureBoundExceeded, CocycleInconsistent
    """
    n = gram.nrows
    validate_gram(gram, n)
    bound = closure_bound if closure_bound is not None else EXACT_CONFIG['closure_bound']

    canonical_generators = []
    for g in generators:
        g.point.validate(gram)
        canonical_generators.append(g.canonical())

    identity = AffineElement.identity(n)
    found: Dict[PointIsometry, AffineElement] = {identity.point: identity}
    order: List[AffineElement] = [identity]
    queue = [identity]

    def record(element: AffineElement) -> bool:
        existing = found.get(element.point)
        if existing is not None:
            if existing.translation != element.translation:
                raise CocycleInconsistent(
                    f"Point part reached with translations {list(map(str, existing.translation))}"
                    f" and {list(map(str, element.translation))}"
                )
            return False
        if len(order) >= bound:
            raise ClosureBoundExceeded(f"Holonomy closure exceeds bound {bound}")
        found[element.point] = element
        order.append(element)
        return True

    while queue:
        current = queue.pop(0)
        for g in canonical_generators:
            product = current.multiply(g)
            if record(product):
                queue.append(product)

    for a in order:
        for b in order:
            record(a.multiply(b))

    logger.debug("close_group %s: n=%d |F|=%d", name, n, len(order))
    return BieberbachGroup(
        dimension=n,
        gram=gram,
        cosets=tuple(order),
        generators=tuple(generators),
        name=name,
    )
