"""
Character Sums - Exact Sums of Roots of Unity

e_{μ,γ} = Σ e^{−2πi v·b} over B-fixed dual vectors of norm μ. Phases v·b
are rationals mod 1; the accumulator keeps a weight per phase and
evaluates the sum exactly, reducing modulo the cyclotomic polynomial
when the modulus is not 1, 2 or 4.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Sequence

import sympy

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.exceptions import IrrationalCharacterSum

_X = sympy.Symbol('x')

# e^{−2πiφ} for φ with denominator dividing 4, as (real, imaginary)
_QUARTER_TURNS = {
    Fraction(0): (1, 0),
    Fraction(1, 4): (0, -1),
    Fraction(1, 2): (-1, 0),
    Fraction(3, 4): (0, 1),
}

# 2cos(2πφ) for the phases where it is rational
_RATIONAL_DOUBLE_COSINES = {
    Fraction(0): Fraction(2),
    Fraction(1, 6): Fraction(1),
    Fraction(1, 4): Fraction(0),
    Fraction(1, 3): Fraction(-1),
    Fraction(1, 2): Fraction(-2),
    Fraction(2, 3): Fraction(-1),
    Fraction(3, 4): Fraction(0),
    Fraction(5, 6): Fraction(1),
}


def _phase(value: Fraction) -> Fraction:
    value = Fraction(value)
    return value - (value.numerator // value.denominator)


def double_cosine(phase: Fraction) -> Fraction:
    """
    Exact 2cos(2πφ).

    Raises:
        IrrationalCharacterSum: when the value is irrational.
    """
    phase = _phase(phase)
    try:
        return _RATIONAL_DOUBLE_COSINES[phase]
    except KeyError:
        raise IrrationalCharacterSum(f"2cos(2π·{phase}) is irrational") from None


@dataclass
class CyclotomicAccumulator:
    """Weights per phase φ ∈ [0,1); value() = Σ w_φ e^{−2πiφ}."""
    weights: Dict[Fraction, Fraction] = field(default_factory=dict)

    def add(self, phase: Fraction, weight=1) -> None:
        key = _phase(phase)
        self.weights[key] = self.weights.get(key, 0) + weight

    def add_rational(self, value) -> None:
        self.add(Fraction(0), value)

    def merge(self, other: 'CyclotomicAccumulator', scale=1) -> None:
        for phase, weight in other.weights.items():
            self.add(phase, scale * weight)

    @property
    def modulus(self) -> int:
        q = 1
        for phase, weight in self.weights.items():
            if weight:
                q = q * phase.denominator // gcd(q, phase.denominator)
        return q

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.weights.values())

    def value(self) -> Fraction:
        """
        Exact rational value of the sum.

        Raises:
            IrrationalCharacterSum: when the sum is not rational.
        """
        q = self.modulus
        if 4 % q == 0:
            real = Fraction(0)
            imaginary = Fraction(0)
            for phase, weight in self.weights.items():
                if not weight:
                    continue
                re, im = _QUARTER_TURNS[phase]
                real += re * weight
                imaginary += im * weight
            if imaginary:
                raise IrrationalCharacterSum(f"Imaginary part {imaginary} does not cancel")
            return real
        return self._reduce(q)

    def _reduce(self, q: int) -> Fraction:
        # ζ = e^{2πi/q}; e^{−2πi r/q} = ζ^{q−r}; reduce mod Φ_q
        expression = sympy.Integer(0)
        for phase, weight in self.weights.items():
            if not weight:
                continue
            r = int(phase * q)
            w = Fraction(weight)
            expression += sympy.Rational(w.numerator, w.denominator) * _X ** ((q - r) % q)
        remainder = sympy.rem(sympy.Poly(expression, _X), sympy.Poly(sympy.cyclotomic_poly(q, _X), _X))
        if remainder.degree() > 0:
            raise IrrationalCharacterSum(
                f"Character sum with modulus {q} reduces to {remainder.as_expr()}"
            )
        constant = remainder.as_expr()
        return Fraction(int(sympy.fraction(constant)[0]), int(sympy.fraction(constant)[1]))


def phase_of(dual_coordinates: Sequence[int], translation: Sequence[Fraction]) -> Fraction:
    """v·b mod 1 with v given by its dual coordinates w_i = ⟨v, e_i⟩."""
    return _phase(sum((Fraction(w) * Fraction(b) for w, b in zip(dual_coordinates, translation)), Fraction(0)))
