"""
Coset Quotient - Translation-Conjugacy Classes Inside One Holonomy Coset

Conjugating γL_λ = B L_{b+λ} by L_μ replaces λ by λ + (B⁻¹−Id)μ, so the
classes inside a coset are the elements of Λ/(B⁻¹−Id)Λ. With the Smith
form U(B⁻¹−Id)V = S a class is labelled by y = Uλ reduced coordinatewise:
free coordinates stay in Z, torsion coordinates are taken mod s_i and
trivial coordinates are dropped to 0.

Only the free part of y moves the element along the fixed space:
p_B(b + λ) has coordinates c + z in the projected lattice basis, where
c is the free part of Ub and z the free part of y.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Sequence, Tuple

import numpy as np

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.lattice_enumerator import enumerate_ball
from core.rational_matrix import RationalMatrix, RationalVector, quadratic_form
from groups.affine_element import AffineElement
from groups.fixed_space import FixedSpaceData, fixed_space

logger = logging.getLogger(__name__)

Label = Tuple[int, ...]


@dataclass(frozen=True)
class CosetQuotient:
    """Λ/(B⁻¹−Id)Λ for one coset, with its length form."""
    coset_index: int
    element: AffineElement
    data: FixedSpaceData
    factors: Tuple[int, ...]
    offset: RationalVector
    free_gram: RationalMatrix

    @property
    def free_rank(self) -> int:
        return self.data.smith.free_rank()

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(s for s in self.factors if s > 1)

    @property
    def free_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.factors) if s == 0)

    @property
    def torsion_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.factors) if s > 1)

    def label_of(self, lam: Sequence[int]) -> Label:
        """Class of γL_λ."""
        U = self.data.smith.U
        n = len(lam)
        y = [sum(U[i][j] * int(lam[j]) for j in range(n)) for i in range(n)]
        return self.reduce(y)

    def reduce(self, y: Sequence[int]) -> Label:
        out = []
        for value, s in zip(y, self.factors):
            if s == 0:
                out.append(int(value))
            elif s == 1:
                out.append(0)
            else:
                out.append(int(value) % s)
        return tuple(out)

    def lift(self, label: Sequence[int]) -> Tuple[int, ...]:
        """A lattice vector λ with label_of(λ) = label."""
        U_inv = self.data.smith.U_inverse()
        n = len(label)
        return tuple(sum(U_inv[i][j] * label[j] for j in range(n)) for i in range(n))

    def free_part(self, label: Sequence[int]) -> Tuple[int, ...]:
        return tuple(label[i] for i in self.free_positions)

    def length_sq(self, label: Sequence[int]) -> Fraction:
        shifted = tuple(c + z for c, z in zip(self.offset, self.free_part(label)))
        return quadratic_form(self.free_gram, shifted)

    def torsion_elements(self) -> Iterator[Tuple[int, ...]]:
        return product(*(range(s) for s in self.torsion))

    def labels_within(self, cutoff_sq: Fraction) -> List[Tuple[Label, Fraction]]:
        """Every class whose squared length is at most cutoff_sq, with that length."""
        if self.free_rank == 0:
            balls = [((), Fraction(0))]
        else:
            balls = enumerate_ball(self.free_gram, cutoff_sq, shift=self.offset)
        n = len(self.factors)
        free_positions = self.free_positions
        torsion_positions = self.torsion_positions
        result = []
        for z, norm in balls:
            for t in self.torsion_elements():
                y = [0] * n
                for position, value in zip(free_positions, z):
                    y[position] = value
                for position, value in zip(torsion_positions, t):
                    y[position] = value
                result.append((tuple(y), norm))
        return result

    def reduce_array(self, Y: np.ndarray) -> np.ndarray:
        """Vectorized reduce over the rows of an integer array."""
        Y = Y.copy()
        for i, s in enumerate(self.factors):
            if s == 1:
                Y[:, i] = 0
            elif s > 1:
                Y[:, i] = np.mod(Y[:, i], s)
        return Y


def coset_quotient(element: AffineElement, gram: RationalMatrix, coset_index: int = 0) -> CosetQuotient:
    data = fixed_space(element.point)
    factors = data.smith.cokernel_factors()
    return CosetQuotient(
        coset_index=coset_index,
        element=element,
        data=data,
        factors=factors,
        offset=data.projected_coordinates(element.translation),
        free_gram=data.projected_gram(gram),
    )
