"""
Affine Element - Point Isometries and Elements γ = B L_b

Elements act on lattice coordinates by γ(x) = B(x + b). Composition
follows (B L_b)(C L_c) = BC L_{C⁻¹b + c}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.exceptions import NonOrthogonalGenerator
from core.rational_matrix import (
    RationalMatrix, RationalVector, add_vectors, is_integral_vector,
    reduce_mod_lattice, sub_vectors, vector,
)


@lru_cache(maxsize=4096)
def _inverse_rows(rows: Tuple[Tuple[Fraction, ...], ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    return RationalMatrix(rows).inverse().rows


@dataclass(frozen=True)
class PointIsometry:
    """Integer matrix B in lattice coordinates (the rotational part of γ)."""
    matrix: RationalMatrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> 'PointIsometry':
        return cls(RationalMatrix(rows))

    @classmethod
    def identity(cls, n: int) -> 'PointIsometry':
        return cls(RationalMatrix.identity(n))

    @property
    def dimension(self) -> int:
        return self.matrix.nrows

    @property
    def key(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self.matrix.rows

    def inverse(self) -> 'PointIsometry':
        return PointIsometry(RationalMatrix(_inverse_rows(self.matrix.rows)))

    def compose(self, other: 'PointIsometry') -> 'PointIsometry':
        return PointIsometry(self.matrix @ other.matrix)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def determinant(self) -> int:
        return int(self.matrix.determinant())

    def is_signed_diagonal(self) -> bool:
        return self.matrix.is_diagonal() and all(
            abs(self.matrix[i, i]) == 1 for i in range(self.dimension)
        )

    def validate(self, gram: RationalMatrix) -> None:
        """
        Check that B preserves Λ = Z^n and the Gram form.

        Raises:
            NonOrthogonalGenerator: on any failure.
        """
        if self.matrix.shape != gram.shape:
            raise NonOrthogonalGenerator(
                f"Point part has shape {self.matrix.shape}, Gram has {gram.shape}"
            )
        if not self.matrix.is_integral():
            raise NonOrthogonalGenerator("Point part must be an integer matrix")
        if abs(self.matrix.determinant()) != 1:
            raise NonOrthogonalGenerator("Point part is not unimodular")
        if self.matrix.transpose() @ gram @ self.matrix != gram:
            raise NonOrthogonalGenerator("Point part does not preserve the Gram form")


@dataclass(frozen=True)
class AffineElement:
    """Element γ = B L_b with rational translation b in lattice coordinates."""
    point: PointIsometry
    translation: RationalVector = field(default=())

    @classmethod
    def create(cls, rows: Sequence[Sequence[int]], translation: Sequence,
               reduce: bool = True) -> 'AffineElement':
        b = vector(translation)
        if reduce:
            b = reduce_mod_lattice(b)
        return cls(PointIsometry.from_rows(rows), b)

    @classmethod
    def identity(cls, n: int) -> 'AffineElement':
        return cls(PointIsometry.identity(n), (Fraction(0),) * n)

    @classmethod
    def lattice_translation(cls, lam: Sequence[int]) -> 'AffineElement':
        n = len(lam)
        return cls(PointIsometry.identity(n), vector(lam))

    @property
    def dimension(self) -> int:
        return self.point.dimension

    @property
    def matrix(self) -> RationalMatrix:
        return self.point.matrix

    def canonical(self) -> 'AffineElement':
        return AffineElement(self.point, reduce_mod_lattice(self.translation))

    def translated(self, lam: Sequence) -> 'AffineElement':
        """γ L_λ = B L_{b+λ}."""
        return AffineElement(self.point, add_vectors(self.translation, vector(lam)))

    def apply(self, x: Sequence) -> RationalVector:
        """γ(x) = B(x + b)."""
        return self.matrix @ add_vectors(vector(x), self.translation)

    def multiply(self, other: 'AffineElement', reduce: bool = True) -> 'AffineElement':
        """(B L_b)(C L_c) = BC L_{C⁻¹b + c}."""
        c_inv = other.point.inverse().matrix
        translation = add_vectors(c_inv @ self.translation, other.translation)
        product = AffineElement(self.point.compose(other.point), translation)
        return product.canonical() if reduce else product

    def inverse(self) -> 'AffineElement':
        """(B L_b)⁻¹ = B⁻¹ L_{−Bb}."""
        bb = self.matrix @ self.translation
        return AffineElement(self.point.inverse(), tuple(-x for x in bb))

    def conjugate_by(self, delta: 'AffineElement') -> 'AffineElement':
        """δγδ⁻¹ = CBC⁻¹ L_{C((B⁻¹−Id)c + b)} for δ = C L_c."""
        B = self.matrix
        C = delta.matrix
        B_inv = self.point.inverse().matrix
        shift = sub_vectors(B_inv @ delta.translation, delta.translation)
        translation = C @ add_vectors(shift, self.translation)
        point = PointIsometry(C @ B @ delta.point.inverse().matrix)
        return AffineElement(point, translation)

    def same_coset(self, other: 'AffineElement') -> bool:
        return self.point == other.point and is_integral_vector(
            sub_vectors(self.translation, other.translation)
        )

    def to_dict(self) -> dict:
        return {
            'matrix': self.matrix.to_int_rows(),
            'translation': [str(x) for x in self.translation],
        }
