"""Group ring elements, regular representation matrices, annihilator sizes."""

from fractions import Fraction

import numpy as np
import pytest

from nullity.coeffring import field, integers_mod
from nullity.groupring import (CapExceeded, annihilator_size,
                               annihilator_size_by_enumeration,
                               apply_matrix, element_index, element_vector,
                               gr_add, gr_multiply, matrix_rank,
                               regular_matrix, ring_size)
from nullity.groups import cyclic, group_from_spec, q8, s3


def test_element_codec_roundtrip():
    K, G = field(3), cyclic(4)
    assert ring_size(K, G) == 81
    for e in (0, 1, 40, 80):
        v = element_vector(K, G, e)
        assert len(v) == 4
        assert element_index(K, G, v) == e
    assert element_vector(K, G, 0) == (0, 0, 0, 0)
    # little-endian in the group index: coefficient of g_0 is the low digit
    assert element_vector(K, G, 5) == (2, 1, 0, 0)


def test_convolution_multiplication():
    K, G = field(2), cyclic(2)
    one_plus_g = (1, 1)
    # (1 + g)^2 = 1 + 2g + g^2 = 0 in characteristic 2
    assert gr_multiply(K, G, one_plus_g, one_plus_g) == (0, 0)
    assert gr_add(K, G, (1, 0), (1, 1)) == (0, 1)

    K5, G3 = field(5), cyclic(3)
    a = (1, 2, 0)
    b = (3, 0, 4)
    # (1 + 2g)(3 + 4g^2) = 3 + 6g + 4g^2 + 8g^3 -> (3+8) + 6g + 4g^2
    assert gr_multiply(K5, G3, a, b) == (1, 1, 4)


def test_multiplication_is_noncommutative_where_the_group_is():
    K, G = field(2), s3()
    a = element_vector(K, G, 0b000110)
    b = element_vector(K, G, 0b010010)
    ab = gr_multiply(K, G, a, b)
    ba = gr_multiply(K, G, b, a)
    assert ab != ba


def test_regular_matrix_identity_and_shape():
    K, G = field(7), s3()
    e = (1, 0, 0, 0, 0, 0)
    for side in ("left", "right"):
        M = regular_matrix(K, G, e, side)
        assert np.array_equal(M.entries, np.eye(6, dtype=np.int64))
    x = (0, 3, 0, 0, 2, 0)
    for side in ("left", "right"):
        M = regular_matrix(K, G, x, side)
        # columns are x*g_j (left) or g_j*x (right), so each column holds
        # the coefficients of x permuted by the group action
        assert sorted(M.entries[:, 0]) == [0, 0, 0, 0, 2, 3]


def test_apply_matrix_matches_direct_product():
    K, G = field(5), q8()
    rng = np.random.default_rng(11)
    for _ in range(20):
        x = tuple(int(v) for v in rng.integers(0, 5, size=8))
        v = tuple(int(v) for v in rng.integers(0, 5, size=8))
        L = regular_matrix(K, G, x, "left")
        R = regular_matrix(K, G, x, "right")
        assert apply_matrix(K, L, v) == gr_multiply(K, G, x, v)
        assert apply_matrix(K, R, v) == gr_multiply(K, G, v, x)


def test_all_ones_element_rank():
    # the all-ones element of F_2[C_2] has the all-ones matrix, rank 1
    K, G = field(2), cyclic(2)
    M = regular_matrix(K, G, (1, 1), "right")
    assert np.array_equal(M.entries, np.ones((2, 2), dtype=np.int64))
    assert matrix_rank(K, M.entries) == 1
    assert annihilator_size(K, G, (1, 1), "left") == 2


def test_matrix_rank_basics():
    K = field(3)
    assert matrix_rank(K, np.zeros((3, 3), dtype=int)) == 0
    assert matrix_rank(K, np.eye(4, dtype=int)) == 4
    # rows 0 and 2 are proportional over F_3 (2 = -1)
    assert matrix_rank(K, [[1, 2, 0], [0, 1, 1], [2, 1, 0]]) == 2
    with pytest.raises(ValueError, match="field"):
        matrix_rank(integers_mod(4), [[1]])


@pytest.mark.parametrize("side", ["left", "right", "twosided"])
def test_rank_route_equals_enumeration_route(side):
    K, G = field(2), q8()
    for e in range(ring_size(K, G)):
        x = element_vector(K, G, e)
        by_rank = annihilator_size(K, G, x, side)
        by_enum = annihilator_size_by_enumeration(K, G, x, side)
        assert by_rank == by_enum


def test_rank_nullity_relation():
    K, G = field(3), s3()
    rng = np.random.default_rng(23)
    for _ in range(25):
        x = tuple(int(v) for v in rng.integers(0, 3, size=6))
        M = regular_matrix(K, G, x, "right")
        r = matrix_rank(K, M.entries)
        assert annihilator_size(K, G, x, "left") == 3 ** (6 - r)


def test_twosided_is_intersection():
    K, G = field(2), s3()
    for e in range(256):
        x = element_vector(K, G, e)
        two = annihilator_size(K, G, x, "twosided")
        left = annihilator_size(K, G, x, "left")
        right = annihilator_size(K, G, x, "right")
        assert two <= min(left, right)
        assert two >= 1


def test_unit_elements_have_trivial_annihilator():
    K, G = integers_mod(4), cyclic(2)
    # 1 + 2g squares to 1 + 4g + 4g^2 = 1, so it is a unit
    u = (1, 2)
    assert gr_multiply(K, G, u, u) == (1, 0)
    assert annihilator_size(K, G, u, "left") == 1
    # 2 * (2 + 2g) covers the zero divisor route
    assert annihilator_size(K, G, (2, 0), "left") == 4
    assert annihilator_size(K, G, (2, 2), "twosided") == 8


def test_enumeration_cap_raises():
    K, G = field(2), q8()
    with pytest.raises(CapExceeded, match="256"):
        annihilator_size_by_enumeration(K, G, (1,) * 8, cap=100)


def test_zero_and_identity_annihilators():
    K, G = field(2, 2), cyclic(3)
    n = G.order
    zero = (0,) * n
    one = (1,) + (0,) * (n - 1)
    for side in ("left", "right", "twosided"):
        assert annihilator_size(K, G, zero, side) == 4**n
        assert annihilator_size(K, G, one, side) == 1
