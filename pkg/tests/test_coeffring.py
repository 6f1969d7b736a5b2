"""Coefficient ring arithmetic: prime fields, extension fields, Z/n."""

import random

import numpy as np
import pytest

from nullity.coeffring import (MAX_EXTENSION_DEGREE, NotInvertibleError,
                               field, integers_mod, is_prime,
                               lex_smallest_irreducible,
                               prime_power_decomposition, ring_from_spec,
                               sum_of_squares_witness)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def _monic_polys(p, d):
    for c in range(p**d):
        yield tuple((c // p**i) % p for i in range(d)) + (1,)


def _irreducible_by_brute_force(low, p, m):
    """Independent check: no monic factorization into smaller degrees."""
    target = tuple(low) + (1,)
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            for h in _monic_polys(p, m - d):
                if _poly_mul(g, h, p) == target:
                    return False
    return True


def test_prime_field_matches_integer_arithmetic():
    K = field(7)
    assert K.size == 7 and K.is_field and K.characteristic == 7
    for a in range(7):
        for b in range(7):
            assert K.add(a, b) == (a + b) % 7
            assert K.mul(a, b) == (a * b) % 7
            assert K.sub(a, b) == (a - b) % 7
        assert K.neg(a) == (-a) % 7
        if a:
            assert K.mul(a, K.inv(a)) == 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_default_modulus_is_first_irreducible(p, m):
    got = lex_smallest_irreducible(p, m)
    assert _irreducible_by_brute_force(got, p, m)
    # nothing earlier in the digit order is irreducible
    for c in range(sum(d * p**i for i, d in enumerate(got))):
        low = tuple((c // p**i) % p for i in range(m))
        assert not _irreducible_by_brute_force(low, p, m)
    assert lex_smallest_irreducible(2, 2) == (1, 1)
    assert lex_smallest_irreducible(3, 2) == (1, 0)


def test_gf4_multiplication():
    # indices: 0, 1, t = 2, t + 1 = 3 with t^2 = t + 1
    K = field(2, 2)
    assert K.modulus_poly == (1, 1)
    assert K.mul(2, 2) == 3
    assert K.mul(2, 3) == 1
    assert K.add(2, 3) == 1
    for a in range(1, 4):
        assert K.pow(a, 3) == 1


def test_gf9_with_default_modulus():
    # t^2 + 1 is the first irreducible over F_3, so t * t = -1 = 2
    K = field(3, 2)
    assert K.modulus_poly == (1, 0)
    assert K.mul(3, 3) == 2
    for a in range(1, 9):
        assert K.pow(a, 8) == 1
        assert K.mul(a, K.inv(a)) == 1


def test_explicit_modulus_accepted_and_checked():
    K = field(2, 3, modulus=(1, 1, 0))
    assert K.size == 8
    assert K.mul(2, 2) == 4  # t * t = t^2
    assert K.mul(4, 2) == 3  # t^3 = t + 1
    with pytest.raises(ValueError, match="reducible"):
        field(2, 2, modulus=(0, 0))  # t^2
    with pytest.raises(ValueError, match="coefficients"):
        field(2, 3, modulus=(1, 1))


@pytest.mark.parametrize("spec,size,char", [
    ("F:7", 7, 7), ("F:4", 4, 2), ("F:2^2", 4, 2), ("F:27", 27, 3),
    ("Z:12", 12, 12),
])
def test_ring_spec_roundtrip(spec, size, char):
    K = ring_from_spec(spec)
    assert K.size == size
    assert K.characteristic == char
    K2 = ring_from_spec(K.spec)
    assert K2 == K


@pytest.mark.parametrize("bad", ["F:6", "F:1", "F:0", "Z:1", "Z:x", "Q:5",
                                 "F:2^0", "77", "F:abc"])
def test_ring_spec_rejects_garbage(bad):
    with pytest.raises(ValueError):
        ring_from_spec(bad)


def test_prime_power_decomposition():
    assert prime_power_decomposition(8) == (2, 3)
    assert prime_power_decomposition(27) == (3, 3)
    assert prime_power_decomposition(7) == (7, 1)
    assert prime_power_decomposition(12) is None
    assert prime_power_decomposition(1) is None
    assert is_prime(97) and not is_prime(91)


def test_extension_degree_cap():
    assert field(2, 8).size == 256
    with pytest.raises(ValueError, match="degree"):
        field(2, MAX_EXTENSION_DEGREE + 1)
    with pytest.raises(ValueError, match="max_size"):
        field(2, 8, max_size=100)
    with pytest.raises(ValueError, match=">= 2"):
        integers_mod(1)


def _exhaustive_ring_axioms(K):
    n = K.size
    for a in range(n):
        assert K.add(a, 0) == a and K.mul(a, 1) == a
        assert K.add(a, K.neg(a)) == 0
        for b in range(n):
            assert K.add(a, b) == K.add(b, a)
            assert K.mul(a, b) == K.mul(b, a)
            for c in range(n):
                assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
                assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
                assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))


@pytest.mark.parametrize("K", [field(2, 3), field(3, 2), integers_mod(6)],
                         ids=["F8", "F9", "Z6"])
def test_ring_axioms_exhaustive_small(K):
    _exhaustive_ring_axioms(K)


@pytest.mark.parametrize("K", [field(3, 5), field(2, 7), integers_mod(360)],
                         ids=["F243", "F128", "Z360"])
def test_ring_axioms_sampled_large(K):
    rng = random.Random(20240521)
    for _ in range(300):
        a, b, c = (rng.randrange(K.size) for _ in range(3))
        assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        assert K.mul(a, b) == K.mul(b, a)
    if K.is_field:
        for _ in range(50):
            a = rng.randrange(1, K.size)
            assert K.pow(a, K.size - 1) == 1


def test_inverse_failures_raise():
    K = field(5)
    with pytest.raises(NotInvertibleError, match="not invertible"):
        K.inv(0)
    Z6 = integers_mod(6)
    assert Z6.inv(5) == 5
    for bad in (0, 2, 3, 4):
        with pytest.raises(NotInvertibleError):
            Z6.inv(bad)
    assert issubclass(NotInvertibleError, ValueError)


def test_tables_agree_with_scalar_route():
    with pytest.raises(ValueError, match="residue"):
        field(7).tables()
    with pytest.raises(ValueError, match="residue"):
        integers_mod(10).tables()
    for K in (field(2, 4), field(3, 2), field(2, 3, modulus=(1, 1, 0))):
        add_t, mul_t, neg_t, inv_t = K.tables()
        for a in range(K.size):
            assert neg_t[a] == K.neg(a)
            for b in range(K.size):
                assert add_t[a, b] == K.add(a, b)
                assert mul_t[a, b] == K.mul(a, b)
        for a in range(K.size):
            try:
                expected = K.inv(a)
            except NotInvertibleError:
                continue
            assert inv_t[a] == expected


def test_array_ops_agree_with_scalar_route():
    rng = np.random.default_rng(7)
    for K in (field(7), field(2, 3), integers_mod(12)):
        ops = K.array_ops()
        x = rng.integers(0, K.size, size=200)
        y = rng.integers(0, K.size, size=200)
        assert all(int(v) == K.add(int(a), int(b))
                   for v, a, b in zip(ops.add(x, y), x, y))
        assert all(int(v) == K.mul(int(a), int(b))
                   for v, a, b in zip(ops.mul(x, y), x, y))
        assert all(int(v) == K.sub(int(a), int(b))
                   for v, a, b in zip(ops.sub(x, y), x, y))
        assert all(int(v) == K.neg(int(a)) for v, a in zip(ops.neg(x), x))


def test_decode_encode_roundtrip():
    K = field(3, 3)
    for a in range(K.size):
        digits = K.decode(a)
        assert len(digits) == 3
        assert K.encode(digits) == a
    assert field(7).decode(5) == (5,)


def test_sum_of_squares_witnesses():
    assert sum_of_squares_witness(field(3)) == (1, 1)
    assert sum_of_squares_witness(field(5)) == (0, 2)
    assert sum_of_squares_witness(field(7)) == (2, 3)
    for q_spec in ("F:2", "F:4", "F:3", "F:9", "F:11", "F:13", "F:25", "F:27"):
        K = ring_from_spec(q_spec)
        w = sum_of_squares_witness(K)
        assert w is not None
        x, y = w
        assert K.add(K.mul(x, x), K.mul(y, y)) == K.neg(1)
        # nothing earlier in x-then-y scan order works
        for xx in range(x + 1):
            top = y if xx == x else K.size
            for yy in range(top):
                assert K.add(K.mul(xx, xx), K.mul(yy, yy)) != K.neg(1)
