"""
Smith Normal Form - Unimodular Diagonalization of Integer Matrices

Wraps sympy's Smith decomposition U·A·V = S with U, V unimodular and S
diagonal with the invariant factors s_1 | s_2 | ... followed by trailing
zeros. The transforms are what the geodesic module uses to read off the
quotient Λ/(B⁻¹−Id)Λ and to lift quotient coordinates back to lattice
vectors.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .rational_matrix import RationalMatrix

IntMatrix = Tuple[Tuple[int, ...], ...]


def _identity(k: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def _int_rows(matrix: Matrix) -> IntMatrix:
    return tuple(tuple(int(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows))


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of smith_normal_form: U·A·V = S."""
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        """Diagonal of S (length min(m, n)), zeros included."""
        return tuple(self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for s in self.invariant_factors if s != 0)

    def cokernel_factors(self) -> Tuple[int, ...]:
        """
        Cyclic factors of Z^m / A·Z^n, one per row of S.

        A factor 0 stands for a free Z summand, 1 for a trivial one.
        """
        m = len(self.U)
        factors = list(self.invariant_factors) + [0] * (m - len(self.invariant_factors))
        return tuple(factors[:m])

    def free_rank(self) -> int:
        return sum(1 for s in self.cokernel_factors() if s == 0)

    def U_inverse(self) -> IntMatrix:
        inverse = RationalMatrix(self.U).inverse()
        return tuple(tuple(int(e) for e in row) for row in inverse.rows)


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """
    Smith normal form of an integer matrix with transforms.

    Args:
        A: m×n integer matrix (nested sequences of ints).

    Returns:
        SmithDecomposition with U·A·V = S.
    """
    rows = [[int(e) for e in row] for row in A]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return SmithDecomposition(U=_identity(m), S=tuple(tuple(r) for r in rows), V=_identity(n))
    S, U, V = smith_normal_decomp(Matrix(rows), domain=ZZ)
    S, U = S.as_mutable(), U.as_mutable()
    # nonnegative diagonal: flip the sign of a row of S together with that row of U
    for i in range(min(m, n)):
        if S[i, i] < 0:
            S[i, :] = -S[i, :]
            U[i, :] = -U[i, :]
    return SmithDecomposition(U=_int_rows(U), S=_int_rows(S), V=_int_rows(V))


def integer_kernel_basis(A: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """
    Z-basis of {x ∈ Z^n : A·x = 0}, saturated in Z^n.

    The columns of V beyond the rank span the kernel because A·V = U⁻¹·S.
    """
    decomposition = smith_normal_form(A)
    n = len(decomposition.V)
    rank = decomposition.rank
    return [tuple(decomposition.V[i][j] for i in range(n)) for j in range(rank, n)]
