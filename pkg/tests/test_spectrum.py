from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from tests.conftest import SMALL_CORPUS
from core.exceptions import DomainViolation, NotDiagonalType
from groups.group_properties import is_orientable
from spectra.comparison import compare_p_spectra, isospectral_degrees, torus_spectrum_equal
from spectra.orbit_oracle import brute_force_multiplicity
from spectra.spectrum_engine import SpectrumEngine, betti_numbers, e_term, multiplicity, spectrum_table
from spectra.sunada import (
    bijection_certificate, diagonal_isospectrality_criterion, sunada_isospectral, sunada_numbers,
)


# =============================================================================
# MULTIPLICITIES
# =============================================================================

def test_klein_bottle_functions(klein):
    table = spectrum_table(klein, 0, 5)
    assert table.items() == [
        (Fraction(0), 1), (Fraction(1), 1), (Fraction(2), 2), (Fraction(4), 3), (Fraction(5), 4),
    ]
    assert table.multiplicity(3) == 0


def test_klein_bottle_one_forms(klein):
    assert multiplicity(klein, 1, 0) == 1
    assert multiplicity(klein, 1, 1) == 4
    assert multiplicity(klein, 2, 0) == 0


def test_klein_bottle_e_terms(klein):
    assert e_term(klein, 0, 1) == 4
    assert e_term(klein, 1, 1) == -2
    assert e_term(klein, 1, Fraction(1, 2)) == 0


def test_rectangular_klein_bottle(group):
    rect = group('klein_bottle_rect')
    assert multiplicity(rect, 0, Fraction(1, 4)) == 0
    assert multiplicity(rect, 0, 1) == 3


def test_ex23i_first_multiplicities(group):
    assert multiplicity(group('ex23i_gamma'), 0, 1) == 3
    assert multiplicity(group('ex23i_gammap'), 0, 1) == 5


def test_ex23i_only_two_forms_agree(group):
    a, b = group('ex23i_gamma'), group('ex23i_gammap')
    assert compare_p_spectra(a, b, 2, 10).equal
    assert compare_p_spectra(a, b, 0, 4).divergence == (Fraction(1), 3, 5)
    assert compare_p_spectra(a, b, 1, 4).divergence == (Fraction(2), 48, 44)
    assert compare_p_spectra(a, b, 4, 4).divergence[0] == 1
    assert isospectral_degrees(a, b, 4) == [2]


def test_sunada_pair_agrees_in_every_degree(group):
    assert isospectral_degrees(group('ex34_gamma'), group('ex34_gammap'), 3) == [0, 1, 2, 3, 4]


def test_ex36_is_zero_isospectral(group):
    assert compare_p_spectra(group('ex36_gamma'), group('ex36_gammap'), 0, 2).equal


def test_negative_mu_and_bad_degree(klein):
    with pytest.raises(DomainViolation):
        multiplicity(klein, 0, -1)
    with pytest.raises(DomainViolation):
        multiplicity(klein, 3, 1)


def test_dimension_mismatch(klein, group):
    with pytest.raises(ValueError):
        compare_p_spectra(klein, group('torus4'), 0)


# =============================================================================
# BETTI NUMBERS
# =============================================================================

def test_betti_numbers(klein, group):
    assert betti_numbers(klein) == [1, 1, 0]
    assert betti_numbers(group('ex23i_gamma')) == [1, 1, 3, 3, 0]
    assert betti_numbers(group('ex23i_gammap')) == [1, 3, 3, 1, 0]
    assert betti_numbers(group('torus4')) == [1, 4, 6, 4, 1]


@pytest.mark.parametrize('name', SMALL_CORPUS)
def test_zero_eigenvalue_gives_betti_numbers(group, name):
    g = group(name)
    betti = betti_numbers(g)
    assert betti[0] == 1
    assert [multiplicity(g, p, 0) for p in range(g.dimension + 1)] == betti
    if is_orientable(g):
        assert betti == betti[::-1]


@pytest.mark.parametrize('name', SMALL_CORPUS)
def test_hodge_duality(group, name):
    g = group(name)
    if not is_orientable(g):
        pytest.skip('duality needs an orientable manifold')
    n = g.dimension
    for p in range(n // 2 + 1):
        assert spectrum_table(g, p, 6).items() == spectrum_table(g, n - p, 6).items()


@pytest.mark.parametrize('name', SMALL_CORPUS)
def test_euler_characteristic_vanishes(group, name):
    g = group(name)
    assert sum((-1) ** p * multiplicity(g, p, 0) for p in range(g.dimension + 1)) == 0


def test_shared_engine_is_thread_safe(klein):
    engine = SpectrumEngine(klein)
    expected = {0: 1, 1: 1, 2: 2, 3: 0, 4: 3, 5: 4}
    mus = list(expected) * 4
    with ThreadPoolExecutor(max_workers=8) as pool:
        found = list(pool.map(lambda mu: engine.multiplicity(0, mu), mus))
    assert found == [expected[mu] for mu in mus]


# =============================================================================
# ORBIT ORACLE
# =============================================================================

@pytest.mark.parametrize('name', ['torus2', 'klein_bottle', 'ex34_gamma', 'ex23i_gammap'])
def test_engine_matches_orbit_oracle(group, name):
    g = group(name)
    for p in range(g.dimension + 1):
        for mu in (0, 1, 2, 4):
            assert multiplicity(g, p, mu) == brute_force_multiplicity(g, p, mu)


def test_oracle_rejects_rotations(group):
    with pytest.raises(NotDiagonalType):
        brute_force_multiplicity(group('ex23iii_gammap'), 0, 1)


# =============================================================================
# SUNADA NUMBERS
# =============================================================================

def test_sunada_table_of_ex34(group):
    table = sunada_numbers(group('ex34_gamma'))
    assert table.nonzero() == [(2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 0, 1)]
    assert table.holonomy_order == 4
    assert table == sunada_numbers(group('ex34_gammap'))


def test_sunada_verdicts(group):
    assert sunada_isospectral(group('ex37_gamma'), group('ex37_gammap'))
    assert sunada_isospectral(group('ex33_gamma'), group('ex33_gammap'))
    assert not sunada_isospectral(group('ex23i_gamma'), group('ex23i_gammap'))
    with pytest.raises(NotDiagonalType):
        sunada_numbers(group('ex36_gamma'))


def test_criterion_on_ex23i(group):
    a, b = group('ex23i_gamma'), group('ex23i_gammap')
    verdicts = [diagonal_isospectrality_criterion(a, b, p) for p in range(5)]
    assert [v.isospectral for v in verdicts] == [False, False, True, False, False]
    assert {(c['d'], c['t']) for c in verdicts[0].certificate} == {(1, 1), (3, 1)}


def test_thirteen_dimensional_pair_is_never_isospectral(group):
    a, b = group('ex35_gamma'), group('ex35_gammap')
    assert not sunada_isospectral(a, b)
    assert not any(diagonal_isospectrality_criterion(a, b, p).isospectral for p in range(14))


def test_fourteen_dimensional_pair_only_in_degree_seven(group):
    a, b = group('ex35_14_gamma'), group('ex35_14_gammap')
    degrees = [p for p in range(15) if diagonal_isospectrality_criterion(a, b, p).isospectral]
    assert degrees == [7]


def test_criterion_agrees_with_multiplicities(group):
    a, b = group('ex23i_gamma'), group('ex23i_gammap')
    for p in range(5):
        assert diagonal_isospectrality_criterion(a, b, p).isospectral == compare_p_spectra(a, b, p, 4).equal


def test_bijection_certificate(group):
    assert bijection_certificate(group('ex34_gamma'), group('ex34_gammap'), 0) is not None
    assert bijection_certificate(group('ex23i_gamma'), group('ex23i_gammap'), 2) == [(0, 0), (1, 1)]
    assert bijection_certificate(group('ex23i_gamma'), group('ex23i_gammap'), 0) is None


def test_torus_spectrum(group, klein):
    for key in ('ex33', 'ex34', 'ex37'):
        assert torus_spectrum_equal(group(f'{key}_gamma'), group(f'{key}_gammap'))
    assert not torus_spectrum_equal(klein, group('torus2'))
