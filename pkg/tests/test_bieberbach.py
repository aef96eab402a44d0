import random
from fractions import Fraction

import pytest

from tests.conftest import SMALL_CORPUS
from core.exceptions import (
    ClosureBoundExceeded, CocycleInconsistent, NonOrthogonalGenerator, NonPositiveDefiniteGram,
)
from core.rational_matrix import RationalMatrix
from groups.affine_element import AffineElement, PointIsometry
from groups.bieberbach_group import close_group
from groups.fixed_space import fixed_space
from groups.group_properties import (
    determinant_parity_holds, diagonal_type_label, fixed_dimensions, is_diagonal_type,
    is_orientable, torsion_free_check,
)

HALF = Fraction(1, 2)
I2 = RationalMatrix.identity(2)


def _random_element(rng, n=3):
    signs = [rng.choice([-1, 1]) for _ in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    rows = [[signs[i] if j == order[i] else 0 for j in range(n)] for i in range(n)]
    translation = [Fraction(rng.randint(-4, 4), rng.choice([1, 2, 4])) for _ in range(n)]
    return AffineElement.create(rows, translation, reduce=False)


# =============================================================================
# AFFINE ELEMENTS
# =============================================================================

def test_multiply_matches_composition_of_actions():
    rng = random.Random(3)
    for _ in range(50):
        a, b = _random_element(rng), _random_element(rng)
        x = [Fraction(rng.randint(-5, 5), 3) for _ in range(3)]
        assert a.multiply(b, reduce=False).apply(x) == a.apply(b.apply(x))


def test_inverse_and_conjugation():
    rng = random.Random(5)
    identity = AffineElement.identity(3)
    for _ in range(50):
        g, delta = _random_element(rng), _random_element(rng)
        assert g.multiply(g.inverse(), reduce=False) == identity
        expected = delta.multiply(g, reduce=False).multiply(delta.inverse(), reduce=False)
        assert g.conjugate_by(delta) == expected


def test_create_reduces_translation():
    g = AffineElement.create([[-1, 0], [0, 1]], ["3/2", "-1/2"])
    assert g.translation == (HALF, HALF)


# =============================================================================
# CLOSURE
# =============================================================================

def test_klein_bottle_closure(klein):
    assert klein.holonomy_order == 2
    assert klein.cosets[0].point.is_identity()
    assert klein.cosets[1].translation == (0, HALF)
    assert torsion_free_check(klein).passed
    assert not is_orientable(klein)
    assert fixed_dimensions(klein) == [2, 1]


def test_rotation_generates_cyclic_holonomy(group):
    gammap = group('ex23iii_gammap')
    assert gammap.holonomy_order == 4
    assert not is_orientable(gammap)
    assert group('ex23iii_gamma').holonomy_order == 4
    assert is_orientable(group('ex23iii_gamma'))


def test_fixed_point_is_detected():
    g = AffineElement.create([[-1, 0], [0, 1]], [HALF, 0])
    report = torsion_free_check(close_group([g], I2))
    assert not report.passed
    assert report.coset_index == 1
    assert 'fixed point' in report.message


def test_shear_is_not_an_isometry():
    with pytest.raises(NonOrthogonalGenerator):
        close_group([AffineElement.create([[1, 1], [0, 1]], [0, 0])], I2)


def test_inconsistent_cocycle():
    g = AffineElement.create([[-1, 0], [0, 1]], [0, Fraction(1, 4)])
    with pytest.raises(CocycleInconsistent):
        close_group([g], I2)


def test_closure_bound():
    g = AffineElement.create([[-1, 0], [0, 1]], [0, HALF])
    with pytest.raises(ClosureBoundExceeded):
        close_group([g], I2, closure_bound=1)


def test_gram_must_be_positive_definite():
    with pytest.raises(NonPositiveDefiniteGram):
        close_group([], RationalMatrix([[1, 2], [2, 1]]))


def test_point_part_must_preserve_gram():
    swap = AffineElement.create([[0, 1], [1, 0]], [HALF, HALF])
    with pytest.raises(NonOrthogonalGenerator):
        close_group([swap], RationalMatrix.diagonal([1, 4]))


# =============================================================================
# FIXED SPACES AND STRUCTURAL PREDICATES
# =============================================================================

def test_fixed_space_of_reflection():
    data = fixed_space(PointIsometry.from_rows([[-1, 0], [0, 1]]))
    assert data.n_B == 1
    assert data.order == 2
    assert data.projector == RationalMatrix.diagonal([0, 1])
    assert data.project((HALF, HALF)) == (0, HALF)
    assert data.quotient_factors == (2, 0)


def test_fixed_space_of_quarter_turn():
    point = PointIsometry.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    data = fixed_space(point)
    assert data.order == 4
    assert data.n_B == 1
    assert data.projector == RationalMatrix.diagonal([0, 0, 0, 1])


@pytest.mark.parametrize('name', SMALL_CORPUS)
def test_corpus_structure(group, name):
    g = group(name)
    assert torsion_free_check(g).passed
    assert determinant_parity_holds(g)
    for coset in g.cosets:
        assert fixed_space(coset.point).dual_identity_holds()


def test_diagonal_type(group):
    assert is_diagonal_type(group('ex34_gamma'))
    assert not is_diagonal_type(group('ex36_gamma'))
    assert not is_diagonal_type(group('klein_bottle_rect'))
    assert diagonal_type_label(group('klein_bottle_rect')) == 'no'
    assert diagonal_type_label(group('torus4')) == 'yes'

    skew_torus = close_group([], RationalMatrix([[2, 1], [1, 2]]))
    assert diagonal_type_label(skew_torus) == 'not applicable'
