"""
Fixed Space - ker(B−Id), the Projector p_B and the Lattices Λ^B, p_B(Λ)

For a point isometry B of finite order m the Q-orthogonal projection
onto ker(B−Id) is the average p_B = (1/m) Σ_j B^j. The Smith form of
B⁻¹−Id gives both a saturated basis of Λ^B = Λ ∩ ker(B−Id) and a basis
of the projected lattice p_B(Λ).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import EXACT_CONFIG
from core.exceptions import ClosureBoundExceeded
from core.rational_matrix import RationalMatrix, RationalVector, quadratic_form
from core.smith_normal_form import SmithDecomposition, smith_normal_form
from .affine_element import PointIsometry


@dataclass(frozen=True)
class FixedSpaceData:
    """Lattice data attached to a point isometry (see module docstring)."""
    n_B: int
    fixed_lattice_basis: Tuple[Tuple[int, ...], ...]
    projected_lattice_basis: Tuple[RationalVector, ...]
    projector: RationalMatrix
    smith: SmithDecomposition
    order: int

    def project(self, v: Sequence[Fraction]) -> RationalVector:
        return self.projector @ tuple(Fraction(x) for x in v)

    @property
    def quotient_factors(self) -> Tuple[int, ...]:
        """Cyclic orders of Λ/(B⁻¹−Id)Λ, 0 marking a free Z summand."""
        return tuple(self.smith.cokernel_factors())

    def free_indices(self) -> Tuple[int, ...]:
        """Rows of the Smith form carrying a free Z summand of Λ/(B⁻¹−Id)Λ."""
        return tuple(i for i, s in enumerate(self.smith.cokernel_factors()) if s == 0)

    def projected_coordinates(self, v: Sequence[Fraction]) -> RationalVector:
        """
        Coordinates of p_B(v) in projected_lattice_basis.

        These are the free rows of U·v; p_B(v) lies in p_B(Λ) iff they are integral.
        """
        U = self.smith.U
        return tuple(
            sum((U[i][j] * Fraction(v[j]) for j in range(len(v))), Fraction(0))
            for i in self.free_indices()
        )

    def projected_gram(self, gram: RationalMatrix) -> RationalMatrix:
        basis = self.projected_lattice_basis
        return RationalMatrix(
            [[quadratic_form(gram, u, v) for v in basis] for u in basis]
        )

    def fixed_gram(self, gram: RationalMatrix) -> RationalMatrix:
        basis = [tuple(Fraction(x) for x in f) for f in self.fixed_lattice_basis]
        return RationalMatrix(
            [[quadratic_form(gram, u, v) for v in basis] for u in basis]
        )

    def dual_identity_holds(self) -> bool:
        """
        Exact check that p_B(Λ*) equals the dual of Λ^B inside ker(B−Id).

        Pairing the projected dual generators p_B(Q⁻¹e_i) with the basis of
        Λ^B gives the integer matrix whose rows are the coordinates of the
        fixed basis; the two lattices coincide iff those rows generate
        Z^{n_B}, i.e. all invariant factors equal 1.
        """
        if self.n_B == 0:
            return True
        pairing = [list(row) for row in zip(*self.fixed_lattice_basis)]
        factors = smith_normal_form(pairing).invariant_factors
        return all(f == 1 for f in factors)


def point_order(point: PointIsometry, bound: Optional[int] = None) -> int:
    bound = bound if bound is not None else EXACT_CONFIG['closure_bound']
    identity = RationalMatrix.identity(point.dimension)
    power = point.matrix
    for m in range(1, bound + 1):
        if power == identity:
            return m
        power = power @ point.matrix
    raise ClosureBoundExceeded(f"Point isometry order exceeds {bound}")


@lru_cache(maxsize=1024)
def _fixed_space_cached(rows: Tuple[Tuple[Fraction, ...], ...]) -> FixedSpaceData:
    point = PointIsometry(RationalMatrix(rows))
    n = point.dimension
    m = point_order(point)

    total = RationalMatrix.zeros(n, n)
    power = RationalMatrix.identity(n)
    for _ in range(m):
        total = total + power
        power = power @ point.matrix
    projector = total.scale(Fraction(1, m))

    difference = point.inverse().matrix - RationalMatrix.identity(n)
    smith = smith_normal_form(difference.to_int_rows())
    rank = smith.rank
    V = smith.V
    fixed_basis = tuple(tuple(V[i][j] for i in range(n)) for j in range(rank, n))

    U_inv = smith.U_inverse()
    factors = smith.cokernel_factors()
    projected_basis = tuple(
        projector @ tuple(Fraction(U_inv[i][k]) for i in range(n))
        for k in range(n) if factors[k] == 0
    )
    return FixedSpaceData(
        n_B=len(fixed_basis),
        fixed_lattice_basis=fixed_basis,
        projected_lattice_basis=projected_basis,
        projector=projector,
        smith=smith,
        order=m,
    )


def fixed_space(point: PointIsometry, gram: Optional[RationalMatrix] = None) -> FixedSpaceData:
    """
    Fixed-space data of a point isometry.

    Args:
        point: Integer matrix B preserving Λ and the Gram form.
        gram: Gram matrix; validated against B when given.

    Returns:
        FixedSpaceData with n_B = dim ker(B−Id).
    """
    if gram is not None:
        point.validate(gram)
    return _fixed_space_cached(point.key)
