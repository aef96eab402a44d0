import random
from fractions import Fraction

import pytest

from tests.conftest import SMALL_CORPUS
from core.exceptions import DomainViolation, ZeroLength
from core.polynomials import from_roots
from core.rational_matrix import RationalMatrix
from corpus.group_catalog import corpus_definition
from groups.affine_element import AffineElement
from groups.bieberbach_group import close_group
from geodesics.brute_force import brute_force_classes
from geodesics.comparison import compare_length_spectra
from geodesics.conjugacy_classes import conjugacy_classes
from geodesics.length_engine import (
    base_point, holonomy_invariant, injectivity_radius_sq, length_sq, translation_part,
    weak_length_spectrum,
)
from geodesics.union_find import UnionFind

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


# =============================================================================
# SINGLE ELEMENTS
# =============================================================================

def test_glide_translation_part():
    glide = AffineElement.create([[-1, 0], [0, 1]], [HALF, HALF])
    plus, prime = translation_part(glide)
    assert plus == (0, HALF)
    assert prime == (HALF, 0)
    assert length_sq(glide, RationalMatrix.identity(2)) == QUARTER


def test_base_point_lies_on_axis():
    glide = AffineElement.create([[-1, 0], [0, 1]], [HALF, HALF])
    origin = base_point(glide)
    assert origin == (-QUARTER, 0)
    assert glide.apply(origin) == (-QUARTER, HALF)


def test_holonomy_invariant():
    glide = AffineElement.create([[-1, 0], [0, 1]], [0, HALF])
    assert holonomy_invariant(glide) == from_roots([-1])
    with pytest.raises(ZeroLength):
        holonomy_invariant(AffineElement.identity(2))


# =============================================================================
# CLASS COUNTS
# =============================================================================

def test_klein_bottle_counts(klein):
    report = conjugacy_classes(klein, Fraction(9, 4))
    assert [(c.squared_length, c.count) for c in report.classes] == [
        (0, 1), (QUARTER, 4), (1, 3), (2, 2), (Fraction(9, 4), 4),
    ]
    assert report.without_zero().lengths() == [QUARTER, 1, 2, Fraction(9, 4)]


def test_klein_bottle_complex_mode(klein):
    report = conjugacy_classes(klein, Fraction(9, 4), 'complex')
    glide = from_roots([-1])
    identity = from_roots([1])
    assert report.count_at(QUARTER, glide) == 4
    assert report.count_at(1, identity) == 3
    assert report.count_at(1, glide) == 0


def test_ex34_multiplicities_differ(group):
    assert conjugacy_classes(group('ex34_gamma'), QUARTER).count_at(QUARTER) == 12
    assert conjugacy_classes(group('ex34_gammap'), QUARTER).count_at(QUARTER) == 6


def test_ex36_multiplicities_differ(group):
    assert conjugacy_classes(group('ex36_gamma'), HALF).count_at(HALF) == 12
    assert conjugacy_classes(group('ex36_gammap'), HALF).count_at(HALF) == 8


def test_unknown_mode_and_negative_cutoff(klein):
    with pytest.raises(ValueError):
        conjugacy_classes(klein, 1, 'fuzzy')
    with pytest.raises(DomainViolation):
        conjugacy_classes(klein, -1)


ORACLE_CORPUS = [
    pytest.param(name, marks=pytest.mark.slow) if corpus_definition(name).dimension == 6 else name
    for name in SMALL_CORPUS
    if corpus_definition(name).dimension <= 6
]


@pytest.mark.parametrize('name', ORACLE_CORPUS)
def test_brute_force_agrees(group, name):
    g = group(name)
    cutoff = Fraction(9, 4)
    expected = conjugacy_classes(g, cutoff)
    oracle = brute_force_classes(g, cutoff, box_radius=2)
    assert oracle.sound
    assert [(c.key, c.count) for c in oracle.classes] == [(c.key, c.count) for c in expected.classes]


def _random_conjugator(rng: random.Random, n: int) -> AffineElement:
    """C L_c with C a signed permutation and c in (1/12)Z^n."""
    columns = rng.sample(range(n), n)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(columns):
        rows[i][j] = rng.choice((1, -1))
    c = [Fraction(rng.randrange(-12, 12), 12) for _ in range(n)]
    return AffineElement.create(rows, c, reduce=False)


@pytest.mark.parametrize('name', ['klein_bottle', 'ex34_gamma', 'ex23iii_gammap', 'ex36_gammap'])
def test_classes_survive_conjugation(group, name):
    g = group(name)
    rng = random.Random(name)
    expected = [(c.key, c.count) for c in conjugacy_classes(g, 2, 'complex').classes]
    for _ in range(20):
        delta = _random_conjugator(rng, g.dimension)
        image = close_group([coset.conjugate_by(delta) for coset in g.cosets], g.gram)
        assert image.holonomy_order == g.holonomy_order
        assert [(c.key, c.count) for c in conjugacy_classes(image, 2, 'complex').classes] == expected


# =============================================================================
# WEAK SPECTRA AND INJECTIVITY RADII
# =============================================================================

def test_weak_spectra_of_ex23ii(group):
    assert weak_length_spectrum(group('ex23ii_gamma'), Fraction(3, 2)) == [0, QUARTER, 1, Fraction(5, 4)]
    assert weak_length_spectrum(group('ex23ii_gammap'), Fraction(3, 2)) == [0, HALF, 1]


@pytest.mark.parametrize('name, radius_sq', [
    ('ex23ii_gamma', Fraction(1, 16)),
    ('ex23ii_gammap', Fraction(1, 8)),
    ('ex23iii_gammap', Fraction(1, 64)),
    ('ex23iv_gamma', Fraction(1, 16)),
    ('ex23iv_gammap', Fraction(1, 16)),
    ('ex23iv_gamma_variant', Fraction(1, 8)),
    ('torus2', QUARTER),
])
def test_injectivity_radius(group, name, radius_sq):
    assert injectivity_radius_sq(group(name)) == radius_sq


# =============================================================================
# COMPARISONS
# =============================================================================

def test_ex34_weak_equal_counted_not(group):
    a, b = group('ex34_gamma'), group('ex34_gammap')
    assert compare_length_spectra(a, b, 2, 'weak').equal
    counted = compare_length_spectra(a, b, 2, 'counted')
    assert not counted.equal
    assert counted.divergence == ((QUARTER, ()), 12, 6)


def test_ex36_complex_lengths_differ(group):
    a, b = group('ex36_gamma'), group('ex36_gammap')
    assert compare_length_spectra(a, b, 1, 'weak').equal
    verdict = compare_length_spectra(a, b, 1, 'complex-weak')
    assert not verdict.equal
    assert verdict.divergence[0][0] == Fraction(1, 16)


def test_gamma_7_pair(group):
    a, b = group('gamma_7_5'), group('gamma_7_6')
    assert compare_length_spectra(a, b, 2, 'weak').equal
    assert compare_length_spectra(a, b, 2, 'counted').divergence == ((QUARTER, ()), 8, 4)


def test_comparison_rejects_mismatches(group, klein):
    with pytest.raises(ValueError):
        compare_length_spectra(klein, group('torus4'))
    with pytest.raises(ValueError):
        compare_length_spectra(klein, klein, 1, 'complex')


# =============================================================================
# UNION-FIND
# =============================================================================

def test_union_find():
    uf = UnionFind(range(6))
    uf.union(4, 2)
    uf.union(2, 5)
    assert uf.representative(5) == 2
    assert len(uf) == 4
    assert uf.groups() == {0: [0], 1: [1], 2: [2, 4, 5], 3: [3]}
