import math
import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors, is_smith_normal_form

from core.exceptions import DomainViolation, NonPositiveDefiniteGram
from core.lattice_enumerator import enumerate_ball, enumerate_shell, shell_counts
from core.norm_series import product as series_product
from core.polynomials import char_poly, divide_by_t_minus_one, exterior_traces, from_roots
from core.rational_matrix import (
    RationalMatrix, format_rational, ldl_decomposition, parse_rational,
)
from core.smith_normal_form import integer_kernel_basis, smith_normal_form


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


# =============================================================================
# RATIONALS AND MATRICES
# =============================================================================

def test_parse_rational_reduces():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == Fraction(-4)
    assert parse_rational(Fraction(2, 4)) == Fraction(1, 2)


@pytest.mark.parametrize("text", ["", "1/0", "a/b", "1/2/3"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 4)) == "-1/4"


def test_inverse_and_determinant():
    A = RationalMatrix([[2, 1], [1, 1]])
    assert A.determinant() == 1
    assert A @ A.inverse() == RationalMatrix.identity(2)


def test_positive_definite():
    assert RationalMatrix([[2, 1], [1, 2]]).is_positive_definite()
    assert not RationalMatrix([[1, 2], [2, 1]]).is_positive_definite()


def test_ldl_reconstructs_gram():
    gram = RationalMatrix([[4, 2, 0], [2, 3, 1], [0, 1, 2]])
    mu, d = ldl_decomposition(gram)
    n = gram.nrows
    for i in range(n):
        for j in range(n):
            # gram = Lᵀ D L with L unit upper triangular in mu
            total = sum(
                (mu[k][i] if k != i else 1) * d[k] * (mu[k][j] if k != j else 1)
                for k in range(n) if k <= min(i, j)
            )
            assert total == gram[i, j]


# =============================================================================
# SMITH NORMAL FORM
# =============================================================================

def test_smith_known_example():
    decomposition = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert decomposition.invariant_factors == (2, 6, 12)


def test_smith_zero_matrix_is_all_free():
    decomposition = smith_normal_form([[0, 0], [0, 0]])
    assert decomposition.cokernel_factors() == (0, 0)
    assert decomposition.free_rank() == 2


def test_smith_randomized():
    rng = random.Random(20240611)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        decomposition = smith_normal_form(A)
        U, S, V = decomposition.U, decomposition.S, decomposition.V

        assert _matmul(_matmul(U, A), V) == [list(r) for r in S]
        assert abs(sympy.Matrix([list(r) for r in U]).det()) == 1
        assert abs(sympy.Matrix([list(r) for r in V]).det()) == 1
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert S[i][j] == 0
        factors = [s for s in decomposition.invariant_factors if s]
        assert all(s > 0 for s in factors)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert decomposition.rank == sympy.Matrix(A).rank()
        assert is_smith_normal_form(DM([list(r) for r in S], ZZ))
        expected = [abs(int(f)) for f in invariant_factors(DM(A, ZZ)) if f]
        assert [s for s in decomposition.invariant_factors if s] == expected
        if m == n:
            assert math.prod(decomposition.invariant_factors) == abs(sympy.Matrix(A).det())


def test_integer_kernel_basis():
    A = [[1, 2, 3], [2, 4, 6]]
    basis = integer_kernel_basis(A)
    assert len(basis) == 2
    for k in basis:
        assert all(sum(row[j] * k[j] for j in range(3)) == 0 for row in A)


# =============================================================================
# LATTICE ENUMERATION
# =============================================================================

def test_square_lattice_counts():
    counts = shell_counts(RationalMatrix.identity(2), 5)
    assert counts[Fraction(0)] == 1
    assert counts[Fraction(1)] == 4
    assert counts[Fraction(2)] == 4
    assert Fraction(3) not in counts
    assert counts[Fraction(5)] == 8


def test_shell_is_sorted():
    assert enumerate_shell(RationalMatrix.identity(2), 1) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_shifted_ball():
    points = enumerate_ball(RationalMatrix.identity(2), Fraction(1, 4), shift=(Fraction(1, 2), 0))
    assert sorted(v for v, _ in points) == [(-1, 0), (0, 0)]
    assert all(norm == Fraction(1, 4) for _, norm in points)


def test_ball_rejects_bad_input():
    with pytest.raises(DomainViolation):
        enumerate_ball(RationalMatrix.identity(2), -1)
    with pytest.raises(NonPositiveDefiniteGram):
        enumerate_ball(RationalMatrix([[1, 2], [2, 1]]), 1)


def test_ball_randomized_against_box():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 3)
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        gram = RationalMatrix(_matmul(list(map(list, zip(*M))), M)) + RationalMatrix.identity(n)
        bound = Fraction(rng.randint(0, 12), rng.choice([1, 2]))
        inverse = gram.inverse()
        radius = [math.isqrt(math.floor(bound * inverse[i, i])) + 1 for i in range(n)]
        expected = set()
        for z in product(*[range(-r, r + 1) for r in radius]):
            norm = sum(z[i] * gram[i, j] * z[j] for i in range(n) for j in range(n))
            if norm <= bound:
                expected.add((z, norm))
        assert set(enumerate_ball(gram, bound)) == expected


# =============================================================================
# POLYNOMIALS AND SERIES
# =============================================================================

def test_char_poly_and_division():
    glide = RationalMatrix([[-1, 0], [0, 1]])
    assert char_poly(glide) == from_roots([1, -1])
    assert divide_by_t_minus_one(char_poly(glide)) == from_roots([-1])


def test_exterior_traces_of_rotation_block():
    B = RationalMatrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    assert exterior_traces(B) == (1, 0, 0, 0, -1)


def test_series_product_matches_square_lattice():
    line = {Fraction(0): 1, Fraction(1): 2, Fraction(4): 2}
    plane = series_product([line, line], Fraction(2))
    assert plane == {Fraction(0): 1, Fraction(1): 4, Fraction(2): 4}
