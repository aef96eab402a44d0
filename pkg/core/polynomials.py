"""
Polynomials - Characteristic Polynomials and Holonomy Invariants

Polynomials are carried as tuples of Fractions in descending degree
order, e.g. (1, 0, 1) for t² + 1. Heavy lifting (determinants,
division, factoring for display) is delegated to sympy.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

import sympy

from .rational_matrix import RationalMatrix

Polynomial = Tuple[Fraction, ...]

T = sympy.Symbol('t')


def _to_sympy(coefficients: Sequence[Fraction]) -> sympy.Poly:
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, coefficients)],
        T,
    )


def _from_sympy(poly: sympy.Poly) -> Polynomial:
    return tuple(Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs())


@lru_cache(maxsize=4096)
def _char_poly_cached(rows: Tuple[Tuple[Fraction, ...], ...]) -> Polynomial:
    matrix = RationalMatrix(rows).to_sympy()
    return _from_sympy(matrix.charpoly(T))


def char_poly(A: RationalMatrix) -> Polynomial:
    """
    Exact characteristic polynomial det(t·Id − A), monic of degree n.

    Args:
        A: Square rational matrix.

    Returns:
        Coefficients in descending degree order.
    """
    if not A.is_square():
        raise ValueError(f"Characteristic polynomial of non-square matrix {A.shape}")
    if A.nrows == 0:
        return (Fraction(1),)
    return _char_poly_cached(A.rows)


def divide_exact(dividend: Sequence[Fraction], divisor: Sequence[Fraction]) -> Polynomial:
    """Quotient of an exact polynomial division; raises if a remainder is left."""
    quotient, remainder = sympy.div(_to_sympy(dividend), _to_sympy(divisor))
    if not remainder.is_zero:
        raise ValueError(f"Division leaves remainder {remainder.as_expr()}")
    return _from_sympy(quotient)


def divide_by_t_minus_one(coefficients: Sequence[Fraction]) -> Polynomial:
    return divide_exact(coefficients, (Fraction(1), Fraction(-1)))


def evaluate(coefficients: Sequence[Fraction], x) -> Fraction:
    value = Fraction(0)
    for c in coefficients:
        value = value * Fraction(x) + Fraction(c)
    return value


def exterior_traces(A: RationalMatrix) -> Tuple[int, ...]:
    """
    Coefficients of det(Id + t·A) in ascending order of t.

    With det(x·Id − A) = Σ a_k x^k, the coefficient of t^p equals (−1)^p a_{n−p}.
    """
    coefficients = char_poly(A)
    traces = []
    for p, c in enumerate(coefficients):
        value = (-1) ** p * c
        if value.denominator != 1:
            raise ValueError("Exterior traces of a non-integral matrix")
        traces.append(int(value))
    return tuple(traces)


def format_polynomial(coefficients: Sequence[Fraction]) -> str:
    """Factored display form, e.g. '(t - 1)^2*(t + 1)'."""
    expression = sympy.factor(_to_sympy(coefficients).as_expr())
    return str(expression).replace('**', '^')


def from_roots(roots: Sequence[int]) -> Polynomial:
    """Monic polynomial ∏ (t − r), used to write expected invariants."""
    expression = sympy.Integer(1)
    for r in roots:
        expression *= (T - r)
    return _from_sympy(sympy.Poly(expression, T))
