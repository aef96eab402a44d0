from math import comb

import pytest

from core.exceptions import DomainViolation
from groups.affine_element import PointIsometry
from spectra.krawtchouk import (
    KrawtchoukTable, integral_roots, krawtchouk, trace_p, trace_vector,
)


def test_small_values():
    assert krawtchouk(4, 0, 3) == 1
    assert krawtchouk(4, 1, 3) == -2
    assert krawtchouk(4, 4, 1) == -1
    assert krawtchouk(14, 7, 3) == 0


def test_integral_roots():
    assert integral_roots(4, 2) == [1, 3]
    assert integral_roots(4, 1) == [2]


def test_three_sign_flips_in_dimensions_13_and_14():
    assert [krawtchouk(13, p, 3) for p in range(14)] == [
        1, 7, 18, 14, -25, -63, -36, 36, 63, 25, -14, -18, -7, -1,
    ]
    assert [p for p in range(15) if 3 in integral_roots(14, p)] == [7]


@pytest.mark.parametrize('n', range(0, 9))
def test_generating_identity(n):
    table = KrawtchoukTable(n)
    for x in range(n + 1):
        assert table.generating_identity_holds(x)


@pytest.mark.parametrize('n', [5, 8])
def test_reciprocity(n):
    for p in range(n + 1):
        for x in range(n + 1):
            assert comb(n, x) * krawtchouk(n, p, x) == comb(n, p) * krawtchouk(n, x, p)


def test_out_of_range():
    with pytest.raises(DomainViolation):
        krawtchouk(3, 4, 0)
    with pytest.raises(DomainViolation):
        krawtchouk(3, 1, 5)


def test_diagonal_trace_is_krawtchouk():
    point = PointIsometry.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert trace_vector(point) == tuple(krawtchouk(3, p, 2) for p in range(4))


def test_rotation_traces():
    point = PointIsometry.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    assert trace_vector(point) == (1, 0, 0, 0, -1)
    assert trace_p(point, 1) == 0
    with pytest.raises(DomainViolation):
        trace_p(point, 5)
