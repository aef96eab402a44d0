"""
Brute Force - Box-Limited Conjugacy Oracle

An independent count of closed geodesic classes that does not use Smith
forms or coset quotients: every element B L_{b+λ} with λ in a box is
listed, conjugation edges by L_{±e_i} and by every coset representative
are added, and union-find components that meet the inner box are
counted. The count is accepted when enlarging the outer box by one more
layer does not change it.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import GEODESIC_CONFIG
from core.exceptions import BoxTooSmall
from core.polynomials import char_poly, divide_by_t_minus_one
from core.rational_matrix import RationalMatrix, add_vectors, parse_rational, quadratic_form
from groups.bieberbach_group import BieberbachGroup
from groups.fixed_space import fixed_space
from .conjugacy_classes import MODES, GeodesicClass, LengthSpectrumReport, conjugation_shift
from .union_find import UnionFind

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]


def _box(n: int, radius: int) -> np.ndarray:
    axis = range(-radius, radius + 1)
    return np.array(list(product(axis, repeat=n)), dtype=np.int64).reshape(-1, n)


def _elements_in_box(group: BieberbachGroup, cutoff: Fraction,
                     radius: int) -> Dict[Element, Fraction]:
    """(coset, λ) ↦ squared length for λ in [−radius, radius]^n with length ≤ cutoff."""
    n = group.dimension
    grid = _box(n, radius)
    gram = np.array(group.gram.to_float_rows())
    found: Dict[Element, Fraction] = {}
    for index, coset in enumerate(group.cosets):
        data = fixed_space(coset.point)
        projector = np.array(data.projector.to_float_rows())
        b = np.array([float(x) for x in coset.translation])
        plus = (grid + b) @ projector.T
        approximate = np.einsum('ij,jk,ik->i', plus, gram, plus)
        for row in grid[approximate <= float(cutoff) + 1e-9].tolist():
            exact = quadratic_form(
                group.gram, data.project(add_vectors(coset.translation, tuple(Fraction(x) for x in row)))
            )
            if exact <= cutoff:
                found[(index,) + tuple(row)] = exact
    return found


def _component_lengths(group: BieberbachGroup, cutoff: Fraction, inner: int,
                       outer: int) -> Dict[Element, Fraction]:
    """Smallest member of each component meeting the inner box ↦ squared length."""
    n = group.dimension
    elements = _elements_in_box(group, cutoff, outer)
    uf = UnionFind(elements)

    by_coset: Dict[int, List[Element]] = {}
    for key in elements:
        by_coset.setdefault(key[0], []).append(key)

    for index, keys in by_coset.items():
        source = group.cosets[index]
        L = np.array([key[1:] for key in keys], dtype=np.int64).reshape(len(keys), n)
        moves = []
        difference = np.array(
            (source.point.inverse().matrix - RationalMatrix.identity(n)).to_int_rows(), dtype=np.int64
        )
        for i in range(n):
            for sign in (1, -1):
                moves.append((index, L + sign * difference[:, i]))
        for delta in group.cosets:
            image_point = delta.point.compose(source.point).compose(delta.point.inverse())
            target = group.coset_index(image_point)
            C = np.array(delta.matrix.to_int_rows(), dtype=np.int64)
            kappa = np.array(conjugation_shift(delta, source, group.cosets[target]), dtype=np.int64)
            moves.append((target, L @ C.T + kappa))
        for target, images in moves:
            for key, image in zip(keys, images.tolist()):
                mapped = (target,) + tuple(image)
                if mapped in uf:
                    uf.union(key, mapped)

    meeting = {}
    for key in elements:
        if max(abs(x) for x in key[1:]) <= inner:
            meeting[uf.representative(key)] = elements[key]
    return meeting


def _report(group: BieberbachGroup, components: Dict[Element, Fraction], cutoff: Fraction,
            mode: str, sound: bool) -> LengthSpectrumReport:
    aggregated: Dict[Tuple, GeodesicClass] = {}
    for representative, length in components.items():
        coset = group.cosets[representative[0]]
        poly = None
        if mode == 'complex' and length > 0:
            poly = divide_by_t_minus_one(char_poly(coset.matrix))
        key = (length, poly or ())
        if key in aggregated:
            aggregated[key].count += 1
        else:
            aggregated[key] = GeodesicClass(length, 1, poly, coset.point)
    return LengthSpectrumReport(
        cutoff=cutoff, mode=mode, classes=[aggregated[k] for k in sorted(aggregated)],
        group_name=group.name, sound=sound,
    )


def brute_force_classes(group: BieberbachGroup, cutoff_sq, box_radius: int,
                        mode: str = 'counted', margin: Optional[int] = None,
                        strict: bool = True) -> LengthSpectrumReport:
    """
    Conjugacy classes with a representative λ in [−box_radius, box_radius]^n.

    Raises:
        BoxTooSmall: in strict mode, when the counts still change as the
            outer box grows from box_radius + margin to box_radius + margin + 1.
    """
    if mode not in MODES:
        raise ValueError(f"Unknown length spectrum mode '{mode}'")
    cutoff = parse_rational(cutoff_sq)
    margin = margin if margin is not None else GEODESIC_CONFIG['oracle_margin']

    first = _component_lengths(group, cutoff, box_radius, box_radius + margin)
    second = _component_lengths(group, cutoff, box_radius, box_radius + margin + 1)
    report_first = _report(group, first, cutoff, mode, True)
    report_second = _report(group, second, cutoff, mode, True)
    sound = [(c.key, c.count) for c in report_first.classes] == \
        [(c.key, c.count) for c in report_second.classes]
    logger.debug("brute_force_classes %s: %d components, sound=%s", group.name, len(second), sound)
    if not sound and strict:
        raise BoxTooSmall(
            f"Orbit counts of {group.name or 'group'} still change at box margin {margin + 1}"
        )
    report_second.sound = sound
    return report_second
