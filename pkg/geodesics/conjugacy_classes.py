"""
Conjugacy Classes - Counted and Complex Length Spectra

Every closed geodesic class is a Γ-conjugacy class. Inside a coset the
translation-conjugacy classes are the labels of its CosetQuotient; the
remaining identifications come from conjugating by one representative
δ = C L_c per holonomy generator,

    δ (B L_{b+λ}) δ⁻¹ = B′ L_{b′ + Cλ + κ},   κ = C((B⁻¹−Id)c + b) − b′,

which maps labels between coset quotients by an integer affine map.
Squared length is conjugation invariant, so the set of labels below a
cutoff is closed under these maps and union-find over them yields the
classes exactly.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import GEODESIC_CONFIG
from core.exceptions import DomainViolation
from core.polynomials import Polynomial, char_poly, divide_by_t_minus_one, format_polynomial
from core.rational_matrix import format_rational, is_integral_vector, parse_rational, sub_vectors
from groups.affine_element import AffineElement, PointIsometry
from groups.bieberbach_group import BieberbachGroup
from .coset_quotient import CosetQuotient
from .length_engine import quotients_for
from .union_find import UnionFind

logger = logging.getLogger(__name__)

MODES = ('weak', 'counted', 'complex')


@dataclass
class GeodesicClass:
    """Classes sharing a squared length (and, in complex mode, a holonomy invariant)."""
    squared_length: Fraction
    count: int
    holonomy_poly: Optional[Polynomial] = None
    coset_point_part: Optional[PointIsometry] = None

    @property
    def key(self) -> Tuple:
        return (self.squared_length, self.holonomy_poly or ())

    def to_dict(self) -> dict:
        return {
            'length_sq': format_rational(self.squared_length),
            'length': f"{float(self.squared_length) ** 0.5:.6f}",
            'count': self.count,
            'holonomy': format_polynomial(self.holonomy_poly) if self.holonomy_poly else None,
        }


@dataclass
class LengthSpectrumReport:
    """Classes up to a cutoff, sorted by squared length."""
    cutoff: Fraction
    mode: str
    classes: List[GeodesicClass] = field(default_factory=list)
    group_name: str = ''
    sound: bool = True

    def lengths(self) -> List[Fraction]:
        return sorted({c.squared_length for c in self.classes})

    def count_at(self, squared_length, holonomy_poly: Optional[Polynomial] = None) -> int:
        target = parse_rational(squared_length)
        return sum(
            c.count for c in self.classes
            if c.squared_length == target
            and (holonomy_poly is None or c.holonomy_poly == tuple(holonomy_poly))
        )

    def total(self) -> int:
        return sum(c.count for c in self.classes)

    def without_zero(self) -> 'LengthSpectrumReport':
        return LengthSpectrumReport(
            cutoff=self.cutoff,
            mode=self.mode,
            classes=[c for c in self.classes if c.squared_length > 0],
            group_name=self.group_name,
            sound=self.sound,
        )

    def to_dict(self) -> dict:
        return {
            'name': self.group_name,
            'mode': self.mode,
            'cutoff': format_rational(self.cutoff),
            'classes': [c.to_dict() for c in self.classes],
        }


# =============================================================================
# LABEL MAPS
# =============================================================================

def conjugation_shift(delta: AffineElement, source: AffineElement,
                      target: AffineElement) -> Tuple[int, ...]:
    """κ = C((B⁻¹−Id)c + b) − b′ for δ = C L_c conjugating source into target's coset."""
    conjugated = source.conjugate_by(delta)
    kappa = sub_vectors(conjugated.translation, target.translation)
    if not is_integral_vector(kappa):
        raise ArithmeticError("Conjugate does not land in the expected coset")
    return tuple(int(x) for x in kappa)


def label_map(delta: AffineElement, source: CosetQuotient,
              target: CosetQuotient) -> Tuple[np.ndarray, np.ndarray]:
    """(A, k) with y′ = A·y + k before reduction in the target quotient."""
    C = np.array(delta.matrix.to_int_rows(), dtype=np.int64)
    U_target = np.array(target.data.smith.U, dtype=np.int64)
    U_source_inv = np.array(source.data.smith.U_inverse(), dtype=np.int64)
    kappa = np.array(conjugation_shift(delta, source.element, target.element), dtype=np.int64)
    return U_target @ C @ U_source_inv, U_target @ kappa


def _orbit_union(group: BieberbachGroup, quotients: Sequence[CosetQuotient],
                 labels: Dict[Tuple[int, ...], Fraction]) -> UnionFind:
    uf = UnionFind(labels)
    by_coset: Dict[int, List[Tuple[int, ...]]] = {}
    for key in labels:
        by_coset.setdefault(key[0], []).append(key)

    for delta in group.holonomy_generators():
        for index, keys in by_coset.items():
            source = quotients[index]
            image_point = PointIsometry(
                delta.matrix @ source.element.matrix @ delta.point.inverse().matrix
            )
            target = quotients[group.coset_index(image_point)]
            A, k = label_map(delta, source, target)
            Y = np.array([key[1:] for key in keys], dtype=np.int64).reshape(len(keys), -1)
            images = target.reduce_array(Y @ A.T + k)
            for key, image in zip(keys, images.tolist()):
                mapped = (target.coset_index,) + tuple(image)
                if mapped not in uf:
                    raise ArithmeticError(
                        f"Conjugation moved label {key} outside the length ball"
                    )
                uf.union(key, mapped)
    return uf


@lru_cache(maxsize=32)
def conjugacy_classes(group: BieberbachGroup, cutoff_sq=None,
                      mode: str = 'counted') -> LengthSpectrumReport:
    """
    Γ-conjugacy classes of squared length ≤ cutoff_sq, the identity class included.

    Args:
        mode: 'counted' groups by squared length, 'complex' by
            (squared length, holonomy invariant), 'weak' is counted
            grouping meant to be read without multiplicities.
    """
    if mode not in MODES:
        raise ValueError(f"Unknown length spectrum mode '{mode}'")
    cutoff = parse_rational(cutoff_sq if cutoff_sq is not None else GEODESIC_CONFIG['default_cutoff_sq'])
    if cutoff < 0:
        raise DomainViolation(f"Cutoff must be nonnegative, got {cutoff}")

    quotients = quotients_for(group)
    labels: Dict[Tuple[int, ...], Fraction] = {}
    for quotient in quotients:
        for y, norm in quotient.labels_within(cutoff):
            labels[(quotient.coset_index,) + y] = norm

    uf = _orbit_union(group, quotients, labels)
    orbits = uf.groups()
    logger.debug("conjugacy_classes %s: %d labels, %d classes", group.name, len(labels), len(orbits))

    aggregated: Dict[Tuple, GeodesicClass] = {}
    for representative in orbits:
        length = labels[representative]
        coset = group.cosets[representative[0]]
        poly = None
        if mode == 'complex' and length > 0:
            poly = divide_by_t_minus_one(char_poly(coset.matrix))
        key = (length, poly or ())
        entry = aggregated.get(key)
        if entry is None:
            aggregated[key] = GeodesicClass(
                squared_length=length, count=1, holonomy_poly=poly, coset_point_part=coset.point,
            )
        else:
            entry.count += 1

    classes = [aggregated[key] for key in sorted(aggregated)]
    return LengthSpectrumReport(cutoff=cutoff, mode=mode, classes=classes, group_name=group.name)
