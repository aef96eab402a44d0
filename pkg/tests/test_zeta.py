import math
from fractions import Fraction

import pytest

from core.exceptions import DomainViolation, NotDiagonalType
from zeta.asymptotics import asymptotic_terms, fit_leading_exponent
from zeta.theta import line_sum, theta, theta_counts
from zeta.zeta_engine import (
    diagonal_zeta, evaluate_identity, poisson_check, zeta_geometric, zeta_spectral,
)


def _jacobi_theta(z: float) -> float:
    """Σ_m e^{−zm²} through its modular transform."""
    return math.sqrt(math.pi / z) * sum(math.exp(-math.pi ** 2 * k * k / z) for k in range(-20, 21))


# =============================================================================
# THETA SUMS
# =============================================================================

def test_theta_counts():
    assert theta_counts(1, 0, 4) == {Fraction(0): 1, Fraction(1): 2, Fraction(4): 2}
    assert theta_counts(1, 1, 2) == {Fraction(1, 4): 2}
    assert theta_counts(2, 1, 1) == {Fraction(1, 4): 2}


@pytest.mark.parametrize('z', [0.5, 1.0, 3.0])
def test_theta_brackets_exact_value(z):
    result = theta(1, 0, z, 4)
    exact = _jacobi_theta(z)
    assert result.value <= exact + 1e-12
    assert exact <= result.value + result.tail + 1e-12


def test_line_sum_tail_bounds_remainder():
    partial, tail = line_sum(0.7, 0.5, 3.0)
    exact = sum(math.exp(-0.7 * (0.5 + m) ** 2) for m in range(-60, 61))
    assert partial <= exact <= partial + tail


def test_theta_rejects_bad_arguments():
    with pytest.raises(DomainViolation):
        theta(1, 2, 1.0, 4)
    with pytest.raises(DomainViolation):
        theta(2, 1, 0.0, 4)


# =============================================================================
# POISSON IDENTITY
# =============================================================================

@pytest.mark.parametrize('name, p', [
    ('torus2', 0),
    ('klein_bottle', 0),
    ('klein_bottle', 1),
    ('klein_bottle_rect', 0),
    ('ex23iii_gammap', 0),
    ('ex23iii_gammap', 2),
    ('ex34_gamma', 1),
])
def test_poisson_identity(group, name, p):
    report = poisson_check(group(name), p, [0.1, 0.3])
    assert report.passed, report.to_dict()
    assert len(report.evaluations) == 2


def test_evaluation_details(klein):
    evaluation = evaluate_identity(klein, 0, 0.2)
    assert evaluation.difference <= evaluation.allowed
    assert evaluation.spectral.tail < 1e-8
    assert evaluation.to_dict()['passed'] is True


def test_zeta_argument_checks(klein):
    with pytest.raises(DomainViolation):
        zeta_spectral(klein, 0, -1.0)
    with pytest.raises(DomainViolation):
        zeta_spectral(klein, 3, 0.1)


# =============================================================================
# DIAGONAL GROUPS
# =============================================================================

@pytest.mark.parametrize('name, p', [
    ('klein_bottle', 0),
    ('ex23i_gamma', 2),
    ('ex34_gamma', 1),
])
def test_diagonal_zeta_matches_spectral_side(group, name, p):
    g = group(name)
    s = 0.15
    closed_form = diagonal_zeta(g, p, s)
    spectral = evaluate_identity(g, p, s).spectral
    assert abs(closed_form.value - spectral.value) <= 1e-7 + closed_form.tail + spectral.tail


def test_diagonal_zeta_requires_diagonal_type(group):
    with pytest.raises(NotDiagonalType):
        diagonal_zeta(group('ex36_gamma'), 0, 0.1)
    with pytest.raises(NotDiagonalType):
        diagonal_zeta(group('klein_bottle_rect'), 0, 0.1)


def test_asymptotic_terms_order(klein):
    terms = asymptotic_terms(klein, 0)
    assert [(term.d, term.t) for term in terms] == [(2, 0), (1, 1)]
    assert [term.coefficient for term in terms] == [0.5, 1.0]


def test_asymptotic_terms_of_ex34(group):
    terms = asymptotic_terms(group('ex34_gamma'), 0)
    assert [(term.d, term.t) for term in terms] == [(4, 0), (3, 1), (2, 1), (3, 2)]


def test_leading_exponent(klein, group):
    assert abs(fit_leading_exponent(group('torus2'), 0) + 1.0) < 1e-3
    # the t = 1 term still contributes at s = 0.02
    assert abs(fit_leading_exponent(klein, 0) + 1.0) < 0.1


def test_both_sides_of_torus(group):
    torus = group('torus2')
    spectral = zeta_spectral(torus, 0, 0.25, 10)
    geometric = zeta_geometric(torus, 0, 0.25, 10)
    assert abs(spectral.value - geometric.value) <= 1e-9 + spectral.tail + geometric.tail
    assert geometric.value == pytest.approx(_jacobi_theta(1.0) ** 2 / math.pi, rel=1e-4)
